#pragma once

// The two-phase translation pipeline: simulate the source model, mine a model
// of the other paradigm from the log, and score it against a fresh log.

#include <cstdint>
#include <optional>
#include <vector>

#include "simmine/model.hpp"
#include "simmine/simulation.hpp"

namespace simmine {

inline constexpr std::uint64_t kDefaultTraceCap = 100'000;
inline constexpr std::uint64_t kDefaultValidationTraces = 10'000;

struct TranslateOptions {
  Paradigm target = Paradigm::Imperative;
  std::optional<std::uint64_t> trace_count;  // N; derived from the model when empty
  std::optional<std::uint64_t> max_length;   // L; derived from the model when empty
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultTraceCap;  // upper bound on a derived N
  std::uint64_t validation_traces = kDefaultValidationTraces;
  FhmConfig fhm;
  DmmConfig dmm;
};

/// L = min_trace_length(|T|) and N = min(min_trace_count(|T|, L), cap) for
/// whichever of the two is not given.
SimulationParams resolve_params(const ProcessModel& source, std::optional<std::uint64_t> trace_count,
                                std::optional<std::uint64_t> max_length, std::uint64_t seed,
                                std::uint64_t cap = kDefaultTraceCap);

/// Seed of the validation log of a run seeded with `seed`.
std::uint64_t validation_seed(std::uint64_t seed);

/// Mines a model of the given paradigm. `alphabet` joins the declarative
/// candidate universe.
ProcessModel mine(const EventLog& log, Paradigm target, const FhmConfig& fhm = {}, const DmmConfig& dmm = {},
                  const std::set<Activity>& alphabet = {});

/// Fitness and appropriateness of `model` on `log`, plus the skipped count.
QualityReport score(const ProcessModel& model, const EventLog& log);

struct Translation {
  ProcessModel model;
  QualityReport report;
  EventLog training_log;
};

/// Throws when the source already has the target paradigm. Errors keep the
/// stage tag of the step that failed.
Translation translate(const ProcessModel& source, const TranslateOptions& options);

struct RepeatedTranslation {
  std::vector<Translation> runs;  // seeds seed, seed+1, ...
  double mean_fitness = 0.0;
  double mean_appropriateness = 0.0;
};

RepeatedTranslation translate_repeated(const ProcessModel& source, const TranslateOptions& options,
                                       std::size_t repeats);

/// Means plus one report object per run.
std::string report_json(const RepeatedTranslation& repeated);

}  // namespace simmine
