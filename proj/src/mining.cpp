#include "simmine/mining.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "simmine/semantics.hpp"

namespace simmine {

using Arc = std::pair<std::size_t, std::size_t>;

// ---------------------------------------------------------------------------
// Dependency statistics

std::size_t DependencyStats::index_of(const Activity& a) const {
  auto it = std::lower_bound(activities_.begin(), activities_.end(), a);
  if (it == activities_.end() || *it != a) throw Error("activity '" + a + "' does not occur in the log");
  return static_cast<std::size_t>(it - activities_.begin());
}

std::size_t DependencyStats::direct_follows(const Activity& a, const Activity& b) const {
  return direct_follows(index_of(a), index_of(b));
}

double DependencyStats::measure(std::size_t a, std::size_t b) const {
  const auto ab = static_cast<double>(direct_[a][b]);
  if (a == b) return 100.0 * ab / (ab + 1.0);
  const auto ba = static_cast<double>(direct_[b][a]);
  return 100.0 * (ab - ba) / (ab + ba + 1.0);
}

double DependencyStats::measure(const Activity& a, const Activity& b) const {
  return measure(index_of(a), index_of(b));
}

double DependencyStats::length_two_measure(std::size_t a, std::size_t b) const {
  const auto n = static_cast<double>(two_[a][b] + two_[b][a]);
  return 100.0 * n / (n + 1.0);
}

DependencyStats dependency_stats(const EventLog& log) {
  if (log.traces.empty()) throw Error("cannot mine an empty log", "mine");
  DependencyStats s;
  std::vector<Word> runs;
  runs.reserve(log.traces.size());
  std::set<Activity> names;
  for (const auto& t : log.traces) {
    runs.push_back(completions(t));
    names.insert(runs.back().begin(), runs.back().end());
  }
  s.activities_.assign(names.begin(), names.end());
  s.trace_count_ = log.traces.size();
  const std::size_t n = s.node_count();
  s.direct_.assign(n, std::vector<std::size_t>(n, 0));
  s.two_ = s.direct_;
  s.eventually_ = s.direct_;
  s.together_ = s.direct_;
  s.around_ = s.direct_;
  s.frequency_.assign(n, 0);

  std::vector<std::size_t> seq;
  std::vector<bool> seen(n);
  for (const auto& run : runs) {
    seq.clear();
    seq.push_back(s.start_index());
    for (const auto& a : run) seq.push_back(s.index_of(a));
    seq.push_back(s.end_index());

    for (std::size_t i = 0; i + 1 < seq.size(); ++i) ++s.direct_[seq[i]][seq[i + 1]];
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
      if (seq[i] == seq[i + 2] && seq[i] != seq[i + 1]) ++s.two_[seq[i]][seq[i + 1]];
    }
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
      const auto a = seq[i], b = seq[i + 1];
      if (a == b) continue;
      std::size_t j = i + 1;
      while (j < seq.size() && seq[j] == b) ++j;
      if (j < seq.size() && seq[j] == a) ++s.around_[a][b];
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = seq.size() - 2; i >= 1; --i) {
      const auto a = seq[i];
      ++s.frequency_[a];
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[b]) ++s.eventually_[a][b];
      }
      seen[a] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!seen[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[b]) ++s.together_[a][b];
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dependency graph

namespace {

std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const std::set<Arc>& arcs, bool reverse) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : arcs) {
    if (reverse) adj[b].push_back(a);
    else adj[a].push_back(b);
  }
  return adj;
}

std::vector<bool> reach(std::size_t n, const std::set<Arc>& arcs, std::size_t from, bool reverse,
                        std::optional<std::size_t> avoid = std::nullopt) {
  auto adj = adjacency(n, arcs, reverse);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : adj[x]) {
      if (avoid && y == *avoid) continue;
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

DependencyGraph dependency_graph(const DependencyStats& s, const EventLog& log, const FhmConfig& config) {
  throw_if_invalid(validate_fhm(config), "heuristics miner configuration", "mine");
  (void)log;
  const std::size_t n = s.activities().size();
  const std::size_t start = s.start_index(), end = s.end_index();
  const std::size_t total = s.node_count();
  DependencyGraph g;

  auto may_source = [&](std::size_t a) { return a != end; };
  auto may_target = [&](std::size_t b) { return b != start; };

  // Plain dependencies.
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      if (a == b || !may_source(a) || !may_target(b) || s.direct_follows(a, b) == 0) continue;
      if (s.measure(a, b) >= config.dependency) g.arcs.emplace(a, b);
    }
  }

  // Relative to best, in both directions.
  for (std::size_t a = 0; a < total; ++a) {
    double best_out = -1.0, best_in = -1.0;
    for (std::size_t b = 0; b < total; ++b) {
      if (a == b) continue;
      if (may_source(a) && may_target(b) && s.direct_follows(a, b) > 0) best_out = std::max(best_out, s.measure(a, b));
      if (may_source(b) && may_target(a) && s.direct_follows(b, a) > 0) best_in = std::max(best_in, s.measure(b, a));
    }
    for (std::size_t b = 0; b < total; ++b) {
      if (a == b) continue;
      if (may_source(a) && may_target(b) && s.direct_follows(a, b) > 0 && s.measure(a, b) > 0 &&
          best_out - s.measure(a, b) <= config.relative_to_best) {
        g.arcs.emplace(a, b);
      }
      if (may_source(b) && may_target(a) && s.direct_follows(b, a) > 0 && s.measure(b, a) > 0 &&
          best_in - s.measure(b, a) <= config.relative_to_best) {
        g.arcs.emplace(b, a);
      }
    }
  }

  // Short loops: any observed repetition passing its threshold.
  const bool ignore = config.ignore_loop_dependency_thresholds;
  for (std::size_t a = 0; a < n; ++a) {
    if (s.direct_follows(a, a) > 0 && (ignore || s.measure(a, a) >= config.length_one_loop)) g.arcs.emplace(a, a);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (s.length_two_follows(a, b) + s.length_two_follows(b, a) == 0) continue;
      if (ignore || s.length_two_measure(a, b) >= config.length_two_loop) {
        g.arcs.emplace(a, b);
        g.arcs.emplace(b, a);
      }
    }
  }

  // Mutual direct succession is a choice inside a loop, not concurrency, when
  // one activity comes back around the other or they do not co-occur.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (s.direct_follows(a, b) == 0 || s.direct_follows(b, a) == 0) continue;
      const std::size_t both = s.traces_with(a, b);
      const bool returns = s.returns_around(a, b) + s.returns_around(b, a) > 0;
      if (returns || (both < s.traces_with(a) && both < s.traces_with(b))) {
        g.arcs.emplace(a, b);
        g.arcs.emplace(b, a);
      }
    }
  }

  // All tasks connected: best-scoring observed predecessor and successor.
  if (config.all_tasks_connected) {
    for (std::size_t x = 0; x < n; ++x) {
      bool has_pred = false, has_succ = false;
      for (auto [a, b] : g.arcs) {
        if (b == x && a != x) has_pred = true;
        if (a == x && b != x) has_succ = true;
      }
      std::optional<std::size_t> best;
      if (!has_pred) {
        for (std::size_t p = 0; p < total; ++p) {
          if (p == x || !may_source(p) || s.direct_follows(p, x) == 0) continue;
          if (!best || s.measure(p, x) > s.measure(*best, x)) best = p;
        }
        if (best) g.arcs.emplace(*best, x);
      }
      best.reset();
      if (!has_succ) {
        for (std::size_t q = 0; q < total; ++q) {
          if (q == x || !may_target(q) || s.direct_follows(x, q) == 0) continue;
          if (!best || s.measure(x, q) > s.measure(x, *best)) best = q;
        }
        if (best) g.arcs.emplace(x, *best);
      }
    }
  }

  // Every node on a start-to-end path: join unreachable parts through their
  // most frequent observed direct succession.
  for (;;) {
    auto fwd = reach(total, g.arcs, start, false);
    std::optional<Arc> fix;
    std::size_t best = 0;
    for (std::size_t a = 0; a < total; ++a) {
      for (std::size_t b = 0; b < total; ++b) {
        if (fwd[a] && !fwd[b] && may_source(a) && may_target(b) && s.direct_follows(a, b) > best) {
          best = s.direct_follows(a, b);
          fix = Arc{a, b};
        }
      }
    }
    if (!fix) break;
    g.arcs.insert(*fix);
  }
  for (;;) {
    auto bwd = reach(total, g.arcs, end, true);
    std::optional<Arc> fix;
    std::size_t best = 0;
    for (std::size_t a = 0; a < total; ++a) {
      for (std::size_t b = 0; b < total; ++b) {
        if (!bwd[a] && bwd[b] && may_source(a) && may_target(b) && s.direct_follows(a, b) > best) {
          best = s.direct_follows(a, b);
          fix = Arc{a, b};
        }
      }
    }
    if (!fix) break;
    g.arcs.insert(*fix);
  }

  // Long-distance dependencies. At a threshold of 100 the pair must always
  // co-occur in order with equal frequency; the arc is only added when the
  // graph lets a escape to the end without passing b.
  if (config.long_distance_dependencies) {
    const bool exact = config.long_distance >= 100.0;
    std::set<Arc> extra;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || g.arcs.contains({a, b}) || s.frequency(a) == 0) continue;
        const double fa = static_cast<double>(s.frequency(a)), fb = static_cast<double>(s.frequency(b));
        const double ev = static_cast<double>(s.eventually_follows(a, b));
        bool strong;
        if (exact) {
          strong = s.eventually_follows(a, b) == s.frequency(a) && s.frequency(a) == s.frequency(b);
        } else {
          double value = 100.0 * (2.0 * ev / (fa + fb + 1.0) - 2.0 * std::abs(fa - fb) / (fa + fb + 1.0));
          strong = value >= config.long_distance;
        }
        if (!strong) continue;
        if (reach(total, g.arcs, a, false, b)[end]) extra.emplace(a, b);
      }
    }
    for (const auto& arc : extra) {
      g.arcs.insert(arc);
      g.long_distance.insert(arc);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Conversion into an imperative model

namespace {

using Binding = std::set<std::size_t>;

struct Bindings {
  std::vector<std::set<Binding>> outputs, inputs;
};

Bindings observe_bindings(const DependencyStats& s, const EventLog& log, const DependencyGraph& g) {
  const std::size_t total = s.node_count();
  std::vector<std::vector<bool>> local(total, std::vector<bool>(total, false));
  for (auto [a, b] : g.arcs) {
    if (!g.long_distance.contains({a, b})) local[a][b] = true;
  }
  Bindings out;
  out.outputs.resize(total);
  out.inputs.resize(total);

  std::vector<std::size_t> seq;
  for (const auto& t : log.traces) {
    seq.clear();
    seq.push_back(s.start_index());
    for (const auto& a : completions(t)) seq.push_back(s.index_of(a));
    seq.push_back(s.end_index());

    for (std::size_t i = 0; i < seq.size(); ++i) {
      const auto a = seq[i];
      // Outputs: successors whose next occurrence has `a` as nearest candidate cause.
      Binding produced;
      for (std::size_t b = 0; b < total; ++b) {
        if (!local[a][b]) continue;
        std::size_t j = i + 1;
        while (j < seq.size() && seq[j] != b) ++j;
        if (j == seq.size()) continue;
        std::size_t k = j;
        while (k-- > i) {
          if (local[seq[k]][b]) break;
        }
        if (k == i) produced.insert(b);
      }
      if (!produced.empty()) out.outputs[a].insert(produced);

      // Inputs: predecessors whose last occurrence has `a` as nearest candidate effect.
      Binding consumed;
      for (std::size_t p = 0; p < total; ++p) {
        if (!local[p][a] || i == 0) continue;
        std::size_t j = i;
        bool found = false;
        while (j-- > 0) {
          if (seq[j] == p) {
            found = true;
            break;
          }
        }
        if (!found) continue;
        std::size_t k = j + 1;
        while (k < i && !local[p][seq[k]]) ++k;
        if (k == i) consumed.insert(p);
      }
      if (!consumed.empty()) out.inputs[a].insert(consumed);
    }
  }
  return out;
}

// Bindings of a node over its arcs: observed ones, long-distance arcs added to
// each, and every arc missing from all of them as a singleton.
std::vector<Binding> complete_bindings(const std::set<Binding>& observed, const std::vector<std::size_t>& local,
                                       const std::vector<std::size_t>& distant) {
  std::set<Binding> result;
  for (Binding b : observed) {
    b.insert(distant.begin(), distant.end());
    result.insert(std::move(b));
  }
  for (auto x : local) {
    bool covered = std::any_of(result.begin(), result.end(), [&](const Binding& b) { return b.contains(x); });
    if (!covered) {
      Binding b{x};
      b.insert(distant.begin(), distant.end());
      result.insert(std::move(b));
    }
  }
  if (result.empty() && !distant.empty()) result.insert(Binding(distant.begin(), distant.end()));
  return {result.begin(), result.end()};
}

class ModelBuilder {
 public:
  NodeId gateway(NodeKind kind) {
    NodeId id = "g" + std::to_string(++gateways_);
    model.add_node(id, kind);
    return id;
  }
  void flow(const NodeId& from, const NodeId& to) { model.add_edge(from, to); }

  // Split side: returns, per arc target, the node its flow leaves from.
  std::map<std::size_t, NodeId> split(const NodeId& exit, const std::vector<Binding>& bindings) {
    std::map<std::size_t, NodeId> port;
    if (bindings.size() == 1) {
      const auto& only = bindings.front();
      NodeId from = exit;
      if (only.size() > 1) {
        from = gateway(NodeKind::AndSplit);
        flow(exit, from);
      }
      for (auto x : only) port[x] = from;
      return port;
    }
    NodeId choice = gateway(NodeKind::XorSplit);
    flow(exit, choice);
    std::map<std::size_t, std::vector<NodeId>> sources;
    for (const auto& b : bindings) {
      if (b.size() == 1) {
        sources[*b.begin()].push_back(choice);
      } else {
        NodeId fork = gateway(NodeKind::AndSplit);
        flow(choice, fork);
        for (auto x : b) sources[x].push_back(fork);
      }
    }
    for (auto& [x, from] : sources) {
      if (from.size() == 1) {
        port[x] = from.front();
      } else {
        NodeId merge = gateway(NodeKind::XorJoin);
        for (const auto& f : from) flow(f, merge);
        port[x] = merge;
      }
    }
    return port;
  }

  // Join side: returns, per arc source, the node its flow enters.
  std::map<std::size_t, NodeId> join(const NodeId& entry, const std::vector<Binding>& bindings) {
    std::map<std::size_t, NodeId> port;
    if (bindings.size() == 1) {
      const auto& only = bindings.front();
      NodeId to = entry;
      if (only.size() > 1) {
        to = gateway(NodeKind::AndJoin);
        flow(to, entry);
      }
      for (auto x : only) port[x] = to;
      return port;
    }
    NodeId merge = gateway(NodeKind::XorJoin);
    flow(merge, entry);
    std::map<std::size_t, std::vector<NodeId>> targets;
    for (const auto& b : bindings) {
      if (b.size() == 1) {
        targets[*b.begin()].push_back(merge);
      } else {
        NodeId sync = gateway(NodeKind::AndJoin);
        flow(sync, merge);
        for (auto x : b) targets[x].push_back(sync);
      }
    }
    for (auto& [x, to] : targets) {
      if (to.size() == 1) {
        port[x] = to.front();
      } else {
        NodeId fork = gateway(NodeKind::XorSplit);
        for (const auto& t : to) flow(fork, t);
        port[x] = fork;
      }
    }
    return port;
  }

  ImperativeModel model;

 private:
  std::size_t gateways_ = 0;
};

}  // namespace

ImperativeModel mine_imperative(const EventLog& log, const FhmConfig& config) {
  const DependencyStats stats = dependency_stats(log);
  const DependencyGraph graph = dependency_graph(stats, log, config);
  const Bindings observed = observe_bindings(stats, log, graph);
  const std::size_t n = stats.activities().size();
  const std::size_t total = stats.node_count();

  ModelBuilder builder;
  std::vector<NodeId> ids(total);
  builder.model.add_node("start", NodeKind::Start);
  builder.model.add_node("end", NodeKind::End);
  ids[stats.start_index()] = "start";
  ids[stats.end_index()] = "end";
  for (std::size_t a = 0; a < n; ++a) {
    ids[a] = "t" + std::to_string(a + 1);
    builder.model.add_node(ids[a], NodeKind::Task, stats.activities()[a]);
  }

  std::vector<std::map<std::size_t, NodeId>> out_port(total), in_port(total);
  for (std::size_t v = 0; v < total; ++v) {
    std::vector<std::size_t> succ_local, succ_far, pred_local, pred_far;
    for (auto [a, b] : graph.arcs) {
      const bool far = graph.long_distance.contains({a, b});
      if (a == v) (far ? succ_far : succ_local).push_back(b);
      if (b == v) (far ? pred_far : pred_local).push_back(a);
    }
    if (!succ_local.empty() || !succ_far.empty()) {
      out_port[v] = builder.split(ids[v], complete_bindings(observed.outputs[v], succ_local, succ_far));
    }
    if (!pred_local.empty() || !pred_far.empty()) {
      in_port[v] = builder.join(ids[v], complete_bindings(observed.inputs[v], pred_local, pred_far));
    }
  }
  for (auto [a, b] : graph.arcs) builder.flow(out_port[a].at(b), in_port[b].at(a));

  throw_if_invalid(validate_imperative(builder.model), "mined imperative model", "mine");
  return std::move(builder.model);
}

// ---------------------------------------------------------------------------
// Declarative mining

namespace {

// Extra activities in the classifier the miner works with.
std::set<Activity> classified(const std::set<Activity>& names, bool typed) {
  if (!typed) return names;
  std::set<Activity> out;
  for (const auto& a : names) {
    out.insert(typed_name(a, Lifecycle::Start));
    out.insert(typed_name(a, Lifecycle::Complete));
  }
  return out;
}

}  // namespace

bool uses_typed_events(const EventLog& log, const DmmConfig& config) {
  if (config.ignore_event_types) return false;
  return std::any_of(log.traces.begin(), log.traces.end(), [](const Trace& t) { return has_overlap(t); });
}

std::vector<CandidateScore> score_declare_candidates(const EventLog& log, const DmmConfig& config,
                                                     const std::set<Activity>& extra_alphabet) {
  if (log.traces.empty()) throw Error("cannot mine an empty log", "mine");
  const bool typed = uses_typed_events(log, config);
  std::map<Word, std::size_t> distinct;
  std::set<Activity> universe = classified(extra_alphabet, typed);
  for (const auto& t : log.traces) {
    Word w = typed ? typed_events(t) : completions(t);
    universe.insert(w.begin(), w.end());
    ++distinct[std::move(w)];
  }

  std::vector<Constraint> candidates;
  for (const auto& a : universe) {
    for (auto tpl : kAllTemplates) {
      if (arity(tpl) == 1) candidates.push_back(make_constraint(tpl, a));
    }
  }
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      if (a == b) continue;
      for (auto tpl : kAllTemplates) {
        if (arity(tpl) != 2 || (tpl == Template::CoExistence && b < a)) continue;
        candidates.push_back(make_constraint(tpl, a, b));
      }
    }
  }

  const auto total = static_cast<double>(log.traces.size());
  std::vector<CandidateScore> out;
  out.reserve(candidates.size());
  for (auto& c : candidates) {
    std::size_t satisfied = 0, activated = 0;
    for (const auto& [word, count] : distinct) {
      const Verdict v = evaluate(c, word);
      if (v.satisfied) satisfied += count;
      if (v.activations > 0) activated += count;
    }
    out.push_back({std::move(c), 100.0 * static_cast<double>(satisfied) / total,
                   100.0 * static_cast<double>(activated) / total});
  }
  return out;
}

std::vector<Constraint> implied_constraints(const Constraint& c) {
  if (arity(c.kind) == 1) {
    if (c.kind == Template::Init || c.kind == Template::End) return {make_constraint(Template::Existence, c.first())};
    return {};
  }
  const auto& a = c.first();
  const auto& b = c.second();
  auto coexistence = a < b ? make_constraint(Template::CoExistence, a, b) : make_constraint(Template::CoExistence, b, a);
  switch (c.kind) {
    case Template::ChainSuccession:
      return {make_constraint(Template::ChainResponse, a, b), make_constraint(Template::ChainPrecedence, a, b),
              make_constraint(Template::Succession, a, b)};
    case Template::ChainResponse:
      return {make_constraint(Template::Response, a, b)};
    case Template::ChainPrecedence:
      return {make_constraint(Template::Precedence, a, b)};
    case Template::Succession:
      return {make_constraint(Template::Response, a, b), make_constraint(Template::Precedence, a, b), coexistence};
    case Template::Response:
      return {make_constraint(Template::RespondedExistence, a, b)};
    case Template::Precedence:
      return {make_constraint(Template::RespondedExistence, b, a)};
    case Template::CoExistence:
      return {make_constraint(Template::RespondedExistence, a, b), make_constraint(Template::RespondedExistence, b, a)};
    case Template::NotSuccession:
      return {make_constraint(Template::NotChainSuccession, a, b)};
    default:
      return {};
  }
}

std::set<Constraint> prune_redundant(const std::set<Constraint>& constraints) {
  std::set<Constraint> implied;
  for (const auto& c : constraints) {
    std::vector<Constraint> stack = implied_constraints(c);
    while (!stack.empty()) {
      Constraint d = std::move(stack.back());
      stack.pop_back();
      if (!implied.insert(d).second) continue;
      for (auto& e : implied_constraints(d)) stack.push_back(std::move(e));
    }
  }
  std::set<Constraint> out;
  for (const auto& c : constraints) {
    if (!implied.contains(c)) out.insert(c);
  }
  return out;
}

DeclareModel mine_declare(const EventLog& log, const DmmConfig& config, const std::set<Activity>& extra_alphabet) {
  if (!(config.min_support >= 0.0 && config.min_support <= 100.0) || !(config.alpha >= 0.0 && config.alpha <= 100.0)) {
    throw Error("declare miner thresholds must lie in [0, 100]", "mine");
  }
  const auto scores = score_declare_candidates(log, config, extra_alphabet);
  DeclareModel model;
  const bool typed = uses_typed_events(log, config);
  model.alphabet = classified(extra_alphabet, typed);
  for (const auto& t : log.traces) {
    for (auto& a : typed ? typed_events(t) : completions(t)) model.alphabet.insert(std::move(a));
  }
  std::set<Constraint> kept;
  for (const auto& s : scores) {
    if (s.support >= config.min_support && s.activation_rate >= config.alpha) kept.insert(s.constraint);
  }
  model.constraints = prune_redundant(kept);
  return model;
}

}  // namespace simmine
