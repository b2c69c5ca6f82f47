#include "simmine/translate.hpp"

#include "simmine/conformance.hpp"
#include "simmine/mining.hpp"
#include "simmine/rng.hpp"

namespace simmine {

SimulationParams resolve_params(const ProcessModel& source, std::optional<std::uint64_t> trace_count,
                                std::optional<std::uint64_t> max_length, std::uint64_t seed, std::uint64_t cap) {
  const auto tasks = static_cast<std::uint64_t>(alphabet_of(source).size());
  SimulationParams p;
  p.seed = seed;
  if (tasks == 0 && (!trace_count || !max_length)) {
    throw Error("a model without activities needs explicit N and L", "params");
  }
  p.max_length = max_length ? *max_length : min_trace_length(tasks);
  p.trace_count = trace_count ? *trace_count : clamp_count(min_trace_count(tasks, p.max_length), cap);
  return p;
}

std::uint64_t validation_seed(std::uint64_t seed) { return Rng::derive(seed, ~std::uint64_t{0}).next(); }

ProcessModel mine(const EventLog& log, Paradigm target, const FhmConfig& fhm, const DmmConfig& dmm,
                  const std::set<Activity>& alphabet) {
  try {
    if (target == Paradigm::Imperative) return mine_imperative(log, fhm);
    return mine_declare(log, dmm, alphabet);
  } catch (const Error& e) {
    throw Error(e.what(), e.stage().empty() ? "mine" : e.stage());
  }
}

QualityReport score(const ProcessModel& model, const EventLog& log) {
  try {
    QualityReport r;
    r.fitness = fitness(model, log);
    const auto a = appropriateness_detail(model, log);
    r.appropriateness = a.value;
    r.skipped_for_appropriateness = a.skipped;
    r.validation_traces = log.traces.size();
    return r;
  } catch (const Error& e) {
    throw Error(e.what(), e.stage().empty() ? "check" : e.stage());
  }
}

Translation translate(const ProcessModel& source, const TranslateOptions& options) {
  if (paradigm_of(source) == options.target) {
    throw Error("source model is already " + std::string(paradigm_name(options.target)) +
                    "; identity translation refused",
                "translate");
  }
  const SimulationParams params =
      resolve_params(source, options.trace_count, options.max_length, options.seed, options.cap);
  if (options.validation_traces == 0) throw Error("validation log needs at least one trace", "translate");

  Translation out{.model = DeclareModel{}, .report = {}, .training_log = simulate(source, params)};
  out.model = mine(out.training_log, options.target, options.fhm, options.dmm, alphabet_of(source));

  SimulationParams fresh = params;
  fresh.trace_count = options.validation_traces;
  fresh.seed = validation_seed(params.seed);
  const EventLog validation = simulate(source, fresh);
  out.report = score(out.model, validation);
  out.report.params_used = params;
  out.report.trace_length_histogram = trace_length_histogram(out.training_log);
  return out;
}

RepeatedTranslation translate_repeated(const ProcessModel& source, const TranslateOptions& options,
                                       std::size_t repeats) {
  if (repeats == 0) throw Error("repeat count must be at least 1", "translate");
  RepeatedTranslation out;
  for (std::size_t i = 0; i < repeats; ++i) {
    TranslateOptions run = options;
    run.seed = options.seed + i;
    out.runs.push_back(translate(source, run));
    out.mean_fitness += out.runs.back().report.fitness;
    out.mean_appropriateness += out.runs.back().report.appropriateness;
  }
  out.mean_fitness /= static_cast<double>(repeats);
  out.mean_appropriateness /= static_cast<double>(repeats);
  return out;
}

}  // namespace simmine
