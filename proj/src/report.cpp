#include <nlohmann/json.hpp>

#include "simmine/io.hpp"
#include "simmine/translate.hpp"

namespace simmine {

namespace {

nlohmann::ordered_json to_json(const QualityReport& report) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [length, count] : report.trace_length_histogram) histogram[std::to_string(length)] = count;
  nlohmann::ordered_json j;
  j["fitness"] = report.fitness;
  j["appropriateness"] = report.appropriateness;
  j["params_used"] = {{"trace_count", report.params_used.trace_count},
                      {"max_length", report.params_used.max_length},
                      {"seed", report.params_used.seed}};
  j["validation_traces"] = report.validation_traces;
  j["skipped_for_appropriateness"] = report.skipped_for_appropriateness;
  j["trace_length_histogram"] = std::move(histogram);
  return j;
}

}  // namespace

std::string report_json(const QualityReport& report) { return to_json(report).dump(2) + "\n"; }

std::string report_json(const RepeatedTranslation& repeated) {
  nlohmann::ordered_json j;
  j["mean_fitness"] = repeated.mean_fitness;
  j["mean_appropriateness"] = repeated.mean_appropriateness;
  j["runs"] = nlohmann::ordered_json::array();
  for (const auto& run : repeated.runs) j["runs"].push_back(to_json(run.report));
  return j.dump(2) + "\n";
}

}  // namespace simmine
