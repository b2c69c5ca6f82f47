#pragma once

// Event log generation from either paradigm, and the lower bounds for the
// number of traces N and the maximum trace length L.

#include <cstddef>
#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "simmine/model.hpp"

namespace simmine {

using BigCount = boost::multiprecision::cpp_int;

/// L = 2 * |T|: the longest repetition-free run executed twice.
std::uint64_t min_trace_length(std::uint64_t task_count);

/// N = sum_{i=0}^{L} |T|^i, exact.
BigCount min_trace_count(std::uint64_t task_count, std::uint64_t max_length);

/// min(count, cap) as a machine integer.
std::uint64_t clamp_count(const BigCount& count, std::uint64_t cap);

/// Declarative simulation: random accepting walks over the product automaton
/// of all constraints. Complete events only.
struct DeclareSimConfig {
  std::size_t walk_restarts = 0;  // 0 -> 10 * L
};

EventLog simulate_declare(const DeclareModel& model, const SimulationParams& params,
                          const DeclareSimConfig& config = {});

/// Imperative simulation settings. Cases arrive at a constant rate and every
/// task takes the same constant time, so inside a case the enabled moves are
/// interleaved uniformly and no clock is kept; each xor-split picks one of
/// its n outgoing flows with probability 1/n.
struct ImperativeSimConfig {
  double inter_arrival_time = 1.0;
  double service_time = 1.0;
  std::size_t rejection_budget_factor = 100;  // attempts = factor * N
  std::size_t max_steps_per_case = 0;         // 0 -> derived from L and model size
};

/// Simulated time needed for N cases at constant inter-arrival time t_a.
double minimum_duration(const SimulationParams& params, const ImperativeSimConfig& config);

/// Branch probability of every outgoing flow of every xor-split.
std::map<Edge, double> gateway_probabilities(const ImperativeModel& model);

/// Token-game simulation with post-filtering on L. Every task execution emits
/// a start event when it takes its input token and a complete event when it
/// releases its output tokens, so parallel tasks may overlap.
EventLog simulate_imperative(const ImperativeModel& model, const SimulationParams& params,
                             const ImperativeSimConfig& config = {});

EventLog simulate(const ProcessModel& model, const SimulationParams& params);

/// Number of traces per activity-execution count.
std::map<std::size_t, std::size_t> trace_length_histogram(const EventLog& log);

}  // namespace simmine
