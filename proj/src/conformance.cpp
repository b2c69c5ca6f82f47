#include "simmine/conformance.hpp"

#include <algorithm>
#include <map>

#include "simmine/token_game.hpp"

namespace simmine {

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_traces(const EventLog& log) {
  if (log.traces.empty()) throw Error("cannot score a model against an empty log", "check");
}

}  // namespace

bool has_typed_alphabet(const DeclareModel& model) {
  if (model.alphabet.empty()) return false;
  const std::string start = typed_name("", Lifecycle::Start);
  const std::string complete = typed_name("", Lifecycle::Complete);
  return std::all_of(model.alphabet.begin(), model.alphabet.end(),
                     [&](const Activity& a) { return ends_with(a, start) || ends_with(a, complete); });
}

Word project(const ProcessModel& model, const Trace& trace) {
  if (const auto* d = std::get_if<DeclareModel>(&model); d && has_typed_alphabet(*d)) return typed_events(trace);
  return completions(trace);
}

Fsa language_automaton(const ProcessModel& model) {
  if (const auto* d = std::get_if<DeclareModel>(&model)) return compile_model(*d);
  return behaviour_automaton(std::get<ImperativeModel>(model)).fsa;
}

double fitness(const DeclareModel& model, const EventLog& log) {
  require_traces(log);
  const ProcessModel wrapped = model;
  std::map<Word, double> cache;
  double total = 0.0;
  for (const auto& t : log.traces) {
    Word w = project(wrapped, t);
    auto it = cache.find(w);
    if (it == cache.end()) {
      double score = 1.0;
      const bool known =
          std::all_of(w.begin(), w.end(), [&](const Activity& a) { return model.alphabet.contains(a); });
      if (!known) {
        score = 0.0;
      } else if (!model.constraints.empty()) {
        std::size_t ok = 0;
        for (const auto& c : model.constraints) ok += evaluate(c, w).satisfied ? 1 : 0;
        score = static_cast<double>(ok) / static_cast<double>(model.constraints.size());
      }
      it = cache.emplace(std::move(w), score).first;
    }
    total += it->second;
  }
  return total / static_cast<double>(log.traces.size());
}

double fitness(const ImperativeModel& model, const EventLog& log) {
  require_traces(log);
  const Fsa language = behaviour_automaton(model).fsa;
  const TokenNet net(model);
  std::map<Word, double> cache;
  double total = 0.0;
  for (const auto& t : log.traces) {
    Word w = completions(t);
    auto it = cache.find(w);
    if (it == cache.end()) {
      double score = language.accepts(w) ? 1.0 : token_replay(net, w).fitness();
      it = cache.emplace(std::move(w), score).first;
    }
    total += it->second;
  }
  return total / static_cast<double>(log.traces.size());
}

double fitness(const ProcessModel& model, const EventLog& log) {
  return std::visit([&](const auto& m) { return fitness(m, log); }, model);
}

Appropriateness appropriateness_detail(const ProcessModel& model, const EventLog& log) {
  require_traces(log);
  const Fsa fsa = language_automaton(model);
  const std::size_t stop = fsa.alphabet().size();
  std::vector<std::vector<bool>> observed(fsa.state_count(), std::vector<bool>(stop + 1, false));
  std::vector<std::size_t> visits(fsa.state_count(), 0);
  Appropriateness out;

  std::vector<int> path;
  for (const auto& t : log.traces) {
    const Word w = project(model, t);
    path.assign(1, fsa.initial());
    std::vector<Symbol> symbols;
    bool ok = true;
    for (const auto& a : w) {
      auto sym = fsa.symbol_of(a);
      int next = sym ? fsa.next(path.back(), *sym) : Fsa::kNoState;
      if (next == Fsa::kNoState) {
        ok = false;
        break;
      }
      symbols.push_back(*sym);
      path.push_back(next);
    }
    if (!ok || !fsa.accepting(path.back())) {
      ++out.skipped;
      continue;
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto s = static_cast<std::size_t>(path[i]);
      ++visits[s];
      observed[s][i < symbols.size() ? symbols[i] : stop] = true;
    }
  }

  double weighted = 0.0;
  std::size_t total = 0;
  for (std::size_t s = 0; s < fsa.state_count(); ++s) {
    if (visits[s] == 0) continue;
    std::size_t allowed = fsa.accepting(static_cast<int>(s)) ? 1 : 0;
    for (Symbol x = 0; x < stop; ++x) allowed += fsa.next(static_cast<int>(s), x) != Fsa::kNoState ? 1 : 0;
    const auto seen = static_cast<std::size_t>(std::count(observed[s].begin(), observed[s].end(), true));
    weighted += static_cast<double>(visits[s]) * static_cast<double>(seen) / static_cast<double>(allowed);
    total += visits[s];
  }
  out.value = total ? weighted / static_cast<double>(total) : 0.0;
  return out;
}

double appropriateness(const ProcessModel& model, const EventLog& log) {
  return appropriateness_detail(model, log).value;
}

EquivalenceResult trace_equivalent_upto(const ProcessModel& a, const ProcessModel& b, std::size_t k,
                                        std::uint64_t cap) {
  if (k == 0) throw Error("bound k must be positive", "check");
  std::set<Activity> names = alphabet_of(a);
  const auto other = alphabet_of(b);
  names.insert(other.begin(), other.end());
  const std::vector<Activity> alphabet(names.begin(), names.end());

  const auto left = language_upto(language_automaton(a).with_alphabet(alphabet), k, cap);
  const auto right = language_upto(language_automaton(b).with_alphabet(alphabet), k, cap);
  std::vector<Word> diff;
  std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(diff),
                                shortlex_less);
  EquivalenceResult out;
  out.equal = diff.empty();
  if (diff.size() > 10) diff.resize(10);
  out.counterexamples = std::move(diff);
  return out;
}

}  // namespace simmine
