#include "simmine/simulation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "simmine/automata.hpp"
#include "simmine/rng.hpp"
#include "simmine/token_game.hpp"

namespace simmine {

std::uint64_t min_trace_length(std::uint64_t task_count) {
  if (task_count == 0) throw Error("task count must be at least 1");
  return 2 * task_count;
}

BigCount min_trace_count(std::uint64_t task_count, std::uint64_t max_length) {
  if (task_count == 0) throw Error("task count must be at least 1");
  BigCount total = 0, power = 1;
  for (std::uint64_t i = 0; i <= max_length; ++i) {
    total += power;
    power *= task_count;
  }
  return total;
}

std::uint64_t clamp_count(const BigCount& count, std::uint64_t cap) {
  if (count >= BigCount(cap)) return cap;
  return count.convert_to<std::uint64_t>();
}

namespace {

std::string case_id(std::size_t index) { return "case-" + std::to_string(index + 1); }

std::string describe(std::string_view paradigm, const SimulationParams& p) {
  std::ostringstream out;
  out << "simulated from " << paradigm << " model (N=" << p.trace_count << ", L=" << p.max_length
      << ", seed=" << p.seed << ")";
  return out.str();
}

void check_params(const SimulationParams& p) {
  if (p.trace_count < 1) throw Error("trace count N must be at least 1", "simulate");
  if (p.max_length < 1) throw Error("maximum trace length L must be at least 1", "simulate");
}

}  // namespace

EventLog simulate_declare(const DeclareModel& model, const SimulationParams& params,
                          const DeclareSimConfig& config) {
  check_params(params);
  throw_if_invalid(validate_declare(model), "declarative model", "simulate");
  const Fsa fsa = compile_model(model);
  auto shortest = fsa.shortest_accepted_length();
  if (!shortest || *shortest > params.max_length) {
    throw Error("the model admits no trace of length <= " + std::to_string(params.max_length) +
                    "; increase L",
                "simulate");
  }

  EventLog log;
  log.source = describe("declare", params);
  log.traces.reserve(static_cast<std::size_t>(params.trace_count));
  for (std::uint64_t i = 0; i < params.trace_count; ++i) {
    Rng rng = Rng::derive(params.seed, i);
    Word word;
    try {
      word = random_accepting_walk(fsa, static_cast<std::size_t>(params.max_length), rng, config.walk_restarts);
    } catch (const Error& e) {
      throw Error(e.what(), "simulate");
    }
    Trace t;
    t.case_id = case_id(static_cast<std::size_t>(i));
    for (auto& a : word) t.append(std::move(a), Lifecycle::Complete);
    log.traces.push_back(std::move(t));
  }
  return log;
}

double minimum_duration(const SimulationParams& params, const ImperativeSimConfig& config) {
  if (!(config.inter_arrival_time > 0.0)) throw Error("inter-arrival time must be positive");
  return static_cast<double>(params.trace_count) / config.inter_arrival_time;
}

std::map<Edge, double> gateway_probabilities(const ImperativeModel& model) {
  std::map<Edge, double> out;
  for (const auto& [id, node] : model.nodes) {
    if (node.kind != NodeKind::XorSplit) continue;
    auto succ = model.successors(id);
    for (const auto& s : succ) out[{id, s}] = 1.0 / static_cast<double>(succ.size());
  }
  return out;
}

namespace {

enum class CaseOutcome { Completed, TooLong, Stuck };

CaseOutcome run_case(const TokenNet& net, std::uint64_t max_length, std::size_t max_steps, Rng& rng,
                     Trace& trace) {
  Marking m = net.initial_marking();
  std::vector<std::size_t> running;
  std::vector<std::size_t> nodes;
  std::vector<std::vector<std::size_t>> by_node;
  std::uint64_t executions = 0;

  for (std::size_t step = 0; step < max_steps; ++step) {
    nodes.clear();
    by_node.clear();
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
      if (!net.enabled(m, t)) continue;
      const std::size_t node = net.transitions()[t].node;
      auto it = std::find(nodes.begin(), nodes.end(), node);
      if (it == nodes.end()) {
        nodes.push_back(node);
        by_node.push_back({t});
      } else {
        by_node[static_cast<std::size_t>(it - nodes.begin())].push_back(t);
      }
    }

    const std::size_t moves = nodes.size() + running.size();
    if (moves == 0) {
      bool empty = std::all_of(m.begin(), m.end(), [](std::uint32_t x) { return x == 0; });
      return empty ? CaseOutcome::Completed : CaseOutcome::Stuck;
    }
    const std::size_t pick = rng.uniform(moves);
    if (pick < nodes.size()) {
      const auto& choices = by_node[pick];
      const std::size_t t = choices[rng.uniform(choices.size())];
      const auto& tr = net.transitions()[t];
      if (tr.label) {
        if (++executions > max_length) return CaseOutcome::TooLong;
        for (auto p : tr.inputs) --m[p];
        running.push_back(t);
        trace.append(*tr.label, Lifecycle::Start);
      } else {
        net.fire(m, t);
      }
    } else {
      const std::size_t slot = pick - nodes.size();
      const auto& tr = net.transitions()[running[slot]];
      for (auto p : tr.outputs) ++m[p];
      trace.append(*tr.label, Lifecycle::Complete);
      running.erase(running.begin() + static_cast<std::ptrdiff_t>(slot));
    }
  }
  return CaseOutcome::Stuck;
}

}  // namespace

EventLog simulate_imperative(const ImperativeModel& model, const SimulationParams& params,
                             const ImperativeSimConfig& config) {
  check_params(params);
  throw_if_invalid(validate_imperative(model), "imperative model", "simulate");
  if (!(config.inter_arrival_time > 0.0) || !(config.service_time > 0.0)) {
    throw Error("inter-arrival and service times must be positive constants", "simulate");
  }

  BehaviourAutomaton behaviour = [&] {
    try {
      return behaviour_automaton(model);
    } catch (const Error& e) {
      throw Error(e.what(), "simulate");
    }
  }();
  auto shortest = behaviour.fsa.shortest_accepted_length();
  if (!shortest || *shortest > params.max_length) {
    throw Error("the model has no complete run with at most " + std::to_string(params.max_length) +
                    " task executions; increase L",
                "simulate");
  }

  const TokenNet net(model);
  const std::size_t max_steps =
      config.max_steps_per_case
          ? config.max_steps_per_case
          : std::max<std::size_t>(1000, 20 * (static_cast<std::size_t>(params.max_length) + 1) *
                                            net.transitions().size());
  const std::uint64_t budget = std::max<std::uint64_t>(1, config.rejection_budget_factor) * params.trace_count;

  EventLog log;
  log.source = describe("imperative", params);
  log.traces.reserve(static_cast<std::size_t>(params.trace_count));
  std::uint64_t attempt = 0;
  for (; attempt < budget && log.traces.size() < params.trace_count; ++attempt) {
    Rng rng = Rng::derive(params.seed, attempt);
    Trace trace;
    trace.case_id = case_id(log.traces.size());
    if (run_case(net, params.max_length, max_steps, rng, trace) == CaseOutcome::Completed) {
      log.traces.push_back(std::move(trace));
    }
  }
  if (log.traces.size() < params.trace_count) {
    std::ostringstream msg;
    msg << "rejection budget of " << budget << " attempts exhausted with " << log.traces.size() << " of "
        << params.trace_count << " traces kept (acceptance rate "
        << static_cast<double>(log.traces.size()) / static_cast<double>(attempt) << ")";
    throw Error(msg.str(), "simulate");
  }
  return log;
}

EventLog simulate(const ProcessModel& model, const SimulationParams& params) {
  if (const auto* d = std::get_if<DeclareModel>(&model)) return simulate_declare(*d, params);
  return simulate_imperative(std::get<ImperativeModel>(model), params);
}

std::map<std::size_t, std::size_t> trace_length_histogram(const EventLog& log) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& t : log.traces) ++out[completions(t).size()];
  return out;
}

}  // namespace simmine
