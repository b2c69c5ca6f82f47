#include "simmine/token_game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "nfa.hpp"

namespace simmine {

TokenNet::TokenNet(const ImperativeModel& model) {
  std::map<Edge, std::size_t> place_of;
  for (const auto& e : model.edges) place_of.emplace(e, place_of.size());
  source_ = place_of.size();
  place_count_ = place_of.size() + 1;

  auto alphabet = model.alphabet();
  alphabet_.assign(alphabet.begin(), alphabet.end());
  by_label_.resize(alphabet_.size());

  for (const auto& [id, node] : model.nodes) {
    const std::size_t index = node_ids_.size();
    node_ids_.push_back(id);
    std::vector<std::size_t> ins, outs;
    for (const auto& p : model.predecessors(id)) ins.push_back(place_of.at({p, id}));
    for (const auto& s : model.successors(id)) outs.push_back(place_of.at({id, s}));

    auto add = [&](std::vector<std::size_t> in, std::vector<std::size_t> out) {
      Transition t{std::move(in), std::move(out), std::nullopt, index};
      if (node.kind == NodeKind::Task) {
        t.label = node.label;
        auto pos = std::lower_bound(alphabet_.begin(), alphabet_.end(), node.label) - alphabet_.begin();
        by_label_[static_cast<std::size_t>(pos)].push_back(transitions_.size());
      }
      transitions_.push_back(std::move(t));
    };

    switch (node.kind) {
      case NodeKind::Start:
        add({source_}, outs);
        break;
      case NodeKind::End:
        for (auto in : ins) add({in}, {});
        break;
      case NodeKind::Task:
      case NodeKind::AndSplit:
        for (auto in : ins) add({in}, outs);
        break;
      case NodeKind::XorSplit:
      case NodeKind::XorJoin:
        for (auto in : ins) {
          for (auto out : outs) add({in}, {out});
        }
        break;
      case NodeKind::AndJoin:
        add(ins, outs);
        break;
    }
  }
}

const std::vector<std::size_t>& TokenNet::labelled(const Activity& activity) const {
  static const std::vector<std::size_t> kNone;
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), activity);
  if (it == alphabet_.end() || *it != activity) return kNone;
  return by_label_[static_cast<std::size_t>(it - alphabet_.begin())];
}

Marking TokenNet::initial_marking() const {
  Marking m(place_count_, 0);
  m[source_] = 1;
  return m;
}

bool TokenNet::enabled(const Marking& m, std::size_t t) const {
  const auto& tr = transitions_[t];
  if (tr.inputs.empty()) return false;
  return std::all_of(tr.inputs.begin(), tr.inputs.end(), [&](std::size_t p) { return m[p] > 0; });
}

void TokenNet::fire(Marking& m, std::size_t t) const {
  const auto& tr = transitions_[t];
  for (auto p : tr.inputs) --m[p];
  for (auto p : tr.outputs) ++m[p];
}

// ---------------------------------------------------------------------------

BehaviourAutomaton behaviour_automaton(const ImperativeModel& model, const ExploreLimits& limits) {
  throw_if_invalid(validate_imperative(model), "imperative model");
  TokenNet net(model);
  detail::Nfa nfa;
  std::map<Marking, int> index;
  std::vector<Marking> markings;
  bool truncated = false;

  auto intern = [&](const Marking& m) {
    auto [it, inserted] = index.emplace(m, static_cast<int>(markings.size()));
    if (inserted) {
      if (markings.size() >= limits.max_markings) {
        throw Error("imperative model has more than " + std::to_string(limits.max_markings) +
                    " reachable markings");
      }
      markings.push_back(m);
      int s = nfa.add_state();
      nfa.states[static_cast<std::size_t>(s)].accepting =
          std::all_of(m.begin(), m.end(), [](std::uint32_t x) { return x == 0; });
    }
    return it->second;
  };

  nfa.initial = intern(net.initial_marking());
  for (std::size_t i = 0; i < markings.size(); ++i) {
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (!net.enabled(markings[i], t)) continue;
      Marking next = markings[i];
      net.fire(next, t);
      if (std::any_of(next.begin(), next.end(),
                      [&](std::uint32_t x) { return x > limits.max_tokens_per_place; })) {
        truncated = true;
        continue;
      }
      int target = intern(next);
      auto& state = nfa.states[i];
      const auto& label = net.transitions()[t].label;
      if (label) {
        auto sym = static_cast<Symbol>(
            std::lower_bound(net.alphabet().begin(), net.alphabet().end(), *label) - net.alphabet().begin());
        state.moves.emplace_back(sym, target);
      } else {
        state.epsilon.push_back(target);
      }
    }
  }
  return {detail::determinize(nfa, net.alphabet()), truncated};
}

// ---------------------------------------------------------------------------

double ReplayResult::fitness() const {
  double missing_term = consumed ? static_cast<double>(missing) / static_cast<double>(consumed) : 0.0;
  double remaining_term = produced ? static_cast<double>(remaining) / static_cast<double>(produced) : 0.0;
  return 0.5 * (1.0 - std::min(1.0, missing_term)) + 0.5 * (1.0 - std::min(1.0, remaining_term));
}

namespace {

// Shortest sequence of silent firings from `start` to a marking satisfying
// `goal`; nullopt if none is found within the budget.
template <typename Goal>
std::optional<std::vector<std::size_t>> silent_path(const TokenNet& net, const Marking& start, Goal goal,
                                                   std::size_t limit) {
  if (goal(start)) return std::vector<std::size_t>{};
  std::vector<Marking> seen{start};
  std::map<Marking, std::size_t> seen_index{{start, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> back{{0, 0}};
  for (std::size_t i = 0; i < seen.size() && seen.size() < limit; ++i) {
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (net.transitions()[t].label || !net.enabled(seen[i], t)) continue;
      Marking next = seen[i];
      net.fire(next, t);
      if (!seen_index.emplace(next, seen.size()).second) continue;
      seen.push_back(next);
      back.emplace_back(i, t);
      if (goal(next)) {
        std::vector<std::size_t> path;
        for (std::size_t j = seen.size() - 1; j != 0; j = back[j].first) path.push_back(back[j].second);
        std::reverse(path.begin(), path.end());
        return path;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReplayResult token_replay(const TokenNet& net, std::span<const Activity> trace, std::size_t limit) {
  ReplayResult r;
  Marking m = net.initial_marking();
  r.produced = 1;

  auto fire = [&](std::size_t t) {
    const auto& tr = net.transitions()[t];
    for (auto p : tr.inputs) {
      if (m[p] == 0) {
        ++r.missing;
        ++m[p];
      }
    }
    net.fire(m, t);
    r.consumed += tr.inputs.size();
    r.produced += tr.outputs.size();
  };

  for (const auto& activity : trace) {
    const auto& candidates = net.labelled(activity);
    if (candidates.empty()) {
      ++r.missing;
      ++r.consumed;
      ++r.produced;
      ++r.remaining;
      continue;
    }
    auto direct = std::find_if(candidates.begin(), candidates.end(),
                               [&](std::size_t t) { return net.enabled(m, t); });
    if (direct != candidates.end()) {
      fire(*direct);
      continue;
    }
    auto path = silent_path(
        net, m,
        [&](const Marking& x) {
          return std::any_of(candidates.begin(), candidates.end(), [&](std::size_t t) { return net.enabled(x, t); });
        },
        limit);
    if (path) {
      for (auto t : *path) fire(t);
      auto now = std::find_if(candidates.begin(), candidates.end(),
                              [&](std::size_t t) { return net.enabled(m, t); });
      fire(*now);
    } else {
      fire(candidates.front());
    }
  }

  auto finish = silent_path(
      net, m, [](const Marking& x) { return std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; }); },
      limit);
  if (finish) {
    for (auto t : *finish) fire(t);
  } else {
    // Consume from the end event once, enabling it silently where possible.
    auto is_end = [&](std::size_t t) { return net.transitions()[t].outputs.empty(); };
    auto end_enabled = [&](const Marking& x) {
      for (std::size_t t = 0; t < net.transitions().size(); ++t) {
        if (is_end(t) && net.enabled(x, t)) return true;
      }
      return false;
    };
    if (auto path = silent_path(net, m, end_enabled, limit)) {
      for (auto t : *path) fire(t);
    }
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (is_end(t) && (net.enabled(m, t) || !end_enabled(m))) {
        fire(t);
        break;
      }
    }
  }
  r.remaining += std::accumulate(m.begin(), m.end(), std::size_t{0});
  return r;
}

}  // namespace simmine
