#include "simmine/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nfa.hpp"

namespace simmine {

namespace {

std::vector<Activity> sorted_unique(std::vector<Activity> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

Fsa::Fsa(std::vector<Activity> alphabet)
    : alphabet_(sorted_unique(std::move(alphabet))),
      accepting_{false},
      delta_{std::vector<int>(alphabet_.size(), kNoState)} {}

Fsa Fsa::universal(std::vector<Activity> alphabet) {
  auto names = sorted_unique(std::move(alphabet));
  std::vector<std::vector<int>> delta{std::vector<int>(names.size(), 0)};
  return from_table(std::move(names), {true}, delta);
}

Fsa Fsa::from_regex(const Regex& regex, std::vector<Activity> alphabet) {
  return detail::determinize(detail::thompson(regex), sorted_unique(std::move(alphabet)));
}

Fsa Fsa::from_table(std::vector<Activity> alphabet, const std::vector<bool>& accepting,
                    const std::vector<std::vector<int>>& delta, int initial) {
  if (!std::is_sorted(alphabet.begin(), alphabet.end()) ||
      std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    throw Error("automaton alphabet must be sorted and free of duplicates");
  }
  const std::size_t k = alphabet.size();
  const std::size_t n = accepting.size();
  if (delta.size() != n || initial < 0 || static_cast<std::size_t>(initial) >= n) {
    throw Error("malformed automaton table");
  }

  // Reachable part, completed with one sink state.
  std::vector<int> id(n, kNoState);
  std::vector<int> order;
  id[static_cast<std::size_t>(initial)] = 0;
  order.push_back(initial);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& row = delta[static_cast<std::size_t>(order[i])];
    if (row.size() != k) throw Error("malformed automaton table");
    for (int t : row) {
      if (t == kNoState) continue;
      if (t < 0 || static_cast<std::size_t>(t) >= n) throw Error("automaton transition out of range");
      if (id[static_cast<std::size_t>(t)] == kNoState) {
        id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t m = order.size() + 1;
  const int sink = static_cast<int>(order.size());
  std::vector<std::vector<int>> full(m, std::vector<int>(k, sink));
  std::vector<bool> acc(m, false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto src = static_cast<std::size_t>(order[i]);
    acc[i] = accepting[src];
    for (std::size_t s = 0; s < k; ++s) {
      int t = delta[src][s];
      if (t != kNoState) full[i][s] = id[static_cast<std::size_t>(t)];
    }
  }

  // Moore partition refinement.
  std::vector<int> cls(m);
  for (std::size_t i = 0; i < m; ++i) cls[i] = acc[i] ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> signatures;
    std::vector<int> next(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<int> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[i]);
      for (std::size_t s = 0; s < k; ++s) sig.push_back(cls[static_cast<std::size_t>(full[i][s])]);
      auto [it, inserted] = signatures.emplace(std::move(sig), static_cast<int>(signatures.size()));
      next[i] = it->second;
    }
    cls.swap(next);
    if (signatures.size() == classes) break;
    classes = signatures.size();
  }

  std::vector<std::vector<int>> qdelta(classes, std::vector<int>(k));
  std::vector<bool> qacc(classes, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = static_cast<std::size_t>(cls[i]);
    qacc[c] = acc[i];
    for (std::size_t s = 0; s < k; ++s) qdelta[c][s] = cls[static_cast<std::size_t>(full[i][s])];
  }

  // States from which acceptance is reachable.
  std::vector<std::vector<int>> reverse(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t s = 0; s < k; ++s) reverse[static_cast<std::size_t>(qdelta[c][s])].push_back(static_cast<int>(c));
  }
  std::vector<bool> live(classes, false);
  std::deque<int> queue;
  for (std::size_t c = 0; c < classes; ++c) {
    if (qacc[c]) {
      live[c] = true;
      queue.push_back(static_cast<int>(c));
    }
  }
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int p : reverse[static_cast<std::size_t>(c)]) {
      if (!live[static_cast<std::size_t>(p)]) {
        live[static_cast<std::size_t>(p)] = true;
        queue.push_back(p);
      }
    }
  }

  const auto start = static_cast<std::size_t>(cls[0]);
  if (!live[start]) return Fsa(std::move(alphabet));

  // Canonical breadth-first numbering of the live part.
  std::vector<int> canon(classes, kNoState);
  std::vector<int> bfs{static_cast<int>(start)};
  canon[start] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      const auto t = static_cast<std::size_t>(qdelta[static_cast<std::size_t>(bfs[i])][s]);
      if (live[t] && canon[t] == kNoState) {
        canon[t] = static_cast<int>(bfs.size());
        bfs.push_back(static_cast<int>(t));
      }
    }
  }

  Fsa out(std::move(alphabet));
  out.accepting_.assign(bfs.size(), false);
  out.delta_.assign(bfs.size(), std::vector<int>(k, kNoState));
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const auto c = static_cast<std::size_t>(bfs[i]);
    out.accepting_[i] = qacc[c];
    for (std::size_t s = 0; s < k; ++s) {
      const auto t = static_cast<std::size_t>(qdelta[c][s]);
      if (live[t]) out.delta_[i][s] = canon[t];
    }
  }
  return out;
}

std::size_t Fsa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : delta_) n += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](int t) { return t != kNoState; }));
  return n;
}

std::optional<Symbol> Fsa::symbol_of(std::string_view name) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name,
                             [](const Activity& a, std::string_view n) { return a < n; });
  if (it == alphabet_.end() || *it != name) return std::nullopt;
  return static_cast<Symbol>(it - alphabet_.begin());
}

int Fsa::run(std::span<const Activity> word) const {
  int state = 0;
  for (const auto& a : word) {
    auto s = symbol_of(a);
    if (!s) return kNoState;
    state = next(state, *s);
    if (state == kNoState) return kNoState;
  }
  return state;
}

bool Fsa::accepts(std::span<const Activity> word) const {
  int state = run(word);
  return state != kNoState && accepting(state);
}

std::optional<std::size_t> Fsa::shortest_accepted_length() const {
  std::vector<std::size_t> dist(state_count(), SIZE_MAX);
  std::deque<int> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (accepting(s)) return dist[static_cast<std::size_t>(s)];
    for (int t : delta_[static_cast<std::size_t>(s)]) {
      if (t != kNoState && dist[static_cast<std::size_t>(t)] == SIZE_MAX) {
        dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(s)] + 1;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

Fsa Fsa::with_alphabet(std::vector<Activity> superset) const {
  auto names = sorted_unique(std::move(superset));
  std::vector<Symbol> remap(alphabet_.size());
  for (Symbol s = 0; s < alphabet_.size(); ++s) {
    auto it = std::lower_bound(names.begin(), names.end(), alphabet_[s]);
    if (it == names.end() || *it != alphabet_[s]) {
      throw Error("alphabet extension drops activity '" + alphabet_[s] + "'");
    }
    remap[s] = static_cast<Symbol>(it - names.begin());
  }
  std::vector<std::vector<int>> delta(state_count(), std::vector<int>(names.size(), kNoState));
  for (std::size_t q = 0; q < state_count(); ++q) {
    for (Symbol s = 0; s < alphabet_.size(); ++s) delta[q][remap[s]] = delta_[q][s];
  }
  return from_table(std::move(names), accepting_, delta);
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {

struct Fragment {
  int start;
  int accept;
};

Fragment build(Nfa& nfa, const Regex& r) {
  switch (r.op()) {
    case Regex::Op::Nothing: {
      return {nfa.add_state(), nfa.add_state()};
    }
    case Regex::Op::Epsilon: {
      int s = nfa.add_state(), f = nfa.add_state();
      nfa.states[static_cast<std::size_t>(s)].epsilon.push_back(f);
      return {s, f};
    }
    case Regex::Op::Symbols: {
      int s = nfa.add_state(), f = nfa.add_state();
      for (auto sym : r.symbol_set()) nfa.states[static_cast<std::size_t>(s)].moves.emplace_back(sym, f);
      return {s, f};
    }
    case Regex::Op::Concat: {
      Fragment first = build(nfa, r.children().front());
      int tail = first.accept;
      for (std::size_t i = 1; i < r.children().size(); ++i) {
        Fragment f = build(nfa, r.children()[i]);
        nfa.states[static_cast<std::size_t>(tail)].epsilon.push_back(f.start);
        tail = f.accept;
      }
      return {first.start, tail};
    }
    case Regex::Op::Union: {
      int s = nfa.add_state(), f = nfa.add_state();
      for (const auto& c : r.children()) {
        Fragment part = build(nfa, c);
        nfa.states[static_cast<std::size_t>(s)].epsilon.push_back(part.start);
        nfa.states[static_cast<std::size_t>(part.accept)].epsilon.push_back(f);
      }
      return {s, f};
    }
    case Regex::Op::Star: {
      int s = nfa.add_state(), f = nfa.add_state();
      Fragment inner = build(nfa, r.children().front());
      nfa.states[static_cast<std::size_t>(s)].epsilon.push_back(inner.start);
      nfa.states[static_cast<std::size_t>(s)].epsilon.push_back(f);
      nfa.states[static_cast<std::size_t>(inner.accept)].epsilon.push_back(inner.start);
      nfa.states[static_cast<std::size_t>(inner.accept)].epsilon.push_back(f);
      return {s, f};
    }
  }
  throw Error("unknown regex operator");
}

void close(const Nfa& nfa, std::vector<int>& set) {
  std::vector<bool> in(nfa.states.size(), false);
  for (int s : set) in[static_cast<std::size_t>(s)] = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (int t : nfa.states[static_cast<std::size_t>(set[i])].epsilon) {
      if (!in[static_cast<std::size_t>(t)]) {
        in[static_cast<std::size_t>(t)] = true;
        set.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
}

}  // namespace

Nfa thompson(const Regex& regex) {
  Nfa nfa;
  Fragment f = build(nfa, regex);
  nfa.initial = f.start;
  nfa.states[static_cast<std::size_t>(f.accept)].accepting = true;
  return nfa;
}

Fsa determinize(const Nfa& nfa, std::vector<Activity> alphabet) {
  const std::size_t k = alphabet.size();
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> sets;
  std::vector<bool> accepting;
  std::vector<std::vector<int>> delta;

  auto intern = [&](std::vector<int> set) {
    auto [it, inserted] = index.emplace(set, static_cast<int>(sets.size()));
    if (inserted) {
      bool acc = std::any_of(set.begin(), set.end(),
                             [&](int s) { return nfa.states[static_cast<std::size_t>(s)].accepting; });
      sets.push_back(std::move(set));
      accepting.push_back(acc);
      delta.emplace_back(k, Fsa::kNoState);
    }
    return it->second;
  };

  std::vector<int> init{nfa.initial};
  close(nfa, init);
  intern(std::move(init));
  std::vector<std::vector<int>> targets(k);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto& t : targets) t.clear();
    for (int s : sets[i]) {
      for (const auto& [sym, t] : nfa.states[static_cast<std::size_t>(s)].moves) {
        if (sym >= k) throw Error("regex symbol outside the alphabet");
        targets[sym].push_back(t);
      }
    }
    for (Symbol sym = 0; sym < k; ++sym) {
      if (targets[sym].empty()) continue;
      std::vector<int> set = targets[sym];
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      close(nfa, set);
      int id = intern(std::move(set));
      delta[i][sym] = id;
    }
  }
  return Fsa::from_table(std::move(alphabet), accepting, delta);
}

}  // namespace detail

// ---------------------------------------------------------------------------

Fsa compile_constraint(const Constraint& constraint, std::span<const Activity> alphabet) {
  auto names = sorted_unique({alphabet.begin(), alphabet.end()});
  return Fsa::from_regex(constraint_regex(constraint, names), names);
}

namespace {

Fsa intersect(const Fsa& a, const Fsa& b) {
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> accepting;
  std::vector<std::vector<int>> delta;
  auto intern = [&](std::pair<int, int> p) {
    auto [it, inserted] = index.emplace(p, static_cast<int>(pairs.size()));
    if (inserted) {
      pairs.push_back(p);
      accepting.push_back(a.accepting(p.first) && b.accepting(p.second));
      delta.emplace_back(k, Fsa::kNoState);
    }
    return it->second;
  };
  intern({0, 0});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Symbol s = 0; s < k; ++s) {
      auto [p, q] = pairs[i];
      int ta = a.next(p, s), tb = b.next(q, s);
      if (ta == Fsa::kNoState || tb == Fsa::kNoState) continue;
      int id = intern({ta, tb});
      delta[i][s] = id;
    }
  }
  return Fsa::from_table(a.alphabet(), accepting, delta);
}

}  // namespace

Fsa product(std::span<const Fsa> automata) {
  if (automata.empty()) throw Error("product needs at least one automaton");
  Fsa result = automata.front();
  for (std::size_t i = 1; i < automata.size(); ++i) {
    if (automata[i].alphabet() != result.alphabet()) {
      throw Error("product of automata over different alphabets");
    }
    result = intersect(result, automata[i]);
  }
  return result;
}

Fsa compile_model(const DeclareModel& model) {
  std::vector<Activity> names(model.alphabet.begin(), model.alphabet.end());
  if (model.constraints.empty()) return Fsa::universal(names);
  std::vector<Fsa> parts;
  parts.reserve(model.constraints.size());
  for (const auto& c : model.constraints) parts.push_back(compile_constraint(c, names));
  return product(parts);
}

std::vector<Word> language_upto(const Fsa& fsa, std::size_t k, std::uint64_t cap) {
  std::vector<Word> out;
  std::vector<std::pair<int, Word>> frontier{{0, Word{}}};
  std::uint64_t generated = 1;
  for (std::size_t len = 0;; ++len) {
    for (const auto& [state, word] : frontier) {
      if (fsa.accepting(state)) out.push_back(word);
    }
    if (len == k) break;
    std::vector<std::pair<int, Word>> next;
    for (const auto& [state, word] : frontier) {
      for (Symbol s = 0; s < fsa.alphabet().size(); ++s) {
        int t = fsa.next(state, s);
        if (t == Fsa::kNoState) continue;
        if (++generated > cap) {
          throw Error("bounded language up to length " + std::to_string(k) + " exceeds the cap of " +
                      std::to_string(cap) + " prefixes");
        }
        Word w = word;
        w.push_back(fsa.alphabet()[s]);
        next.emplace_back(t, std::move(w));
      }
    }
    if (next.empty()) break;
    frontier.swap(next);
  }
  return out;
}

Word random_accepting_walk(const Fsa& fsa, std::size_t max_len, Rng& rng, std::size_t max_restarts) {
  auto shortest = fsa.shortest_accepted_length();
  if (!shortest || *shortest > max_len) {
    throw Error("automaton accepts no word of length <= " + std::to_string(max_len) +
                "; choose a larger maximum trace length");
  }
  const std::size_t attempts = max_restarts ? max_restarts : std::max<std::size_t>(1, 10 * max_len);
  const std::size_t k = fsa.alphabet().size();
  std::vector<Symbol> moves;
  moves.reserve(k);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    int state = fsa.initial();
    Word word;
    for (;;) {
      if (word.size() == max_len) {
        if (fsa.accepting(state)) return word;
        break;
      }
      moves.clear();
      for (Symbol s = 0; s < k; ++s) {
        if (fsa.next(state, s) != Fsa::kNoState) moves.push_back(s);
      }
      const bool can_stop = fsa.accepting(state);
      const std::size_t choice = rng.uniform(moves.size() + (can_stop ? 1 : 0));
      if (choice == moves.size()) return word;
      word.push_back(fsa.alphabet()[moves[choice]]);
      state = fsa.next(state, moves[choice]);
    }
  }
  throw Error("random walk found no accepted word within length " + std::to_string(max_len) + " after " +
              std::to_string(attempts) + " restarts");
}

}  // namespace simmine
