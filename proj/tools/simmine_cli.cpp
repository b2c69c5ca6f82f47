// simmine: translate process models between the Declare and imperative
// paradigms by simulating the source and mining the target.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "simmine/conformance.hpp"
#include "simmine/io.hpp"
#include "simmine/mining.hpp"
#include "simmine/simulation.hpp"
#include "simmine/translate.hpp"

namespace {

using namespace simmine;

std::string fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

std::string render(const Word& w) {
  std::string out = "<";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + w[i];
  return out + ">";
}

Paradigm target_of(const std::string& name) {
  auto p = parse_paradigm(name);
  if (!p) throw Error("unknown target paradigm '" + name + "'", "cli");
  return *p;
}

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

bool is_log_path(const std::string& path) {
  const std::string ext = ".xes";
  return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

struct MinerFlags {
  std::string config_path;
  std::vector<std::string> overrides;

  void add(CLI::App* app) {
    app->add_option("--config", config_path, "Miner settings file (key = value lines)");
    app->add_option("--set", overrides, "Override one miner setting, e.g. --set minSupport=90");
  }

  MinerConfig load() const {
    MinerConfig config;
    if (!config_path.empty()) config = read_miner_config(read_text_file(config_path), config);
    for (const auto& o : overrides) config = read_miner_config(o, config);
    return config;
  }
};

struct ParamFlags {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> l;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultTraceCap;

  void add(CLI::App* app) {
    app->add_option("--n", n, "Number of traces N (default: lower bound, capped)")->check(CLI::PositiveNumber);
    app->add_option("--l", l, "Maximum trace length L (default: 2 * tasks)")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--cap", cap, "Upper bound on a derived N")->capture_default_str()->check(CLI::PositiveNumber);
  }
};

void print_report(std::ostream& out, const QualityReport& r) {
  out << "N = " << r.params_used.trace_count << ", L = " << r.params_used.max_length
      << ", seed = " << r.params_used.seed << "\n"
      << "fitness = " << fixed(r.fitness) << "\n"
      << "appropriateness = " << fixed(r.appropriateness) << "\n";
  if (r.skipped_for_appropriateness) {
    out << "skipped for appropriateness = " << r.skipped_for_appropriateness << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate process models between Declare and imperative control flow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "simmine 0.1.0");

  // translate
  auto* translate_cmd = app.add_subcommand("translate", "Simulate a model and mine one of the other paradigm");
  std::string source_path, target_name = "imperative", out_path, report_path, dot_path;
  std::size_t repeat = 1;
  std::uint64_t validation = kDefaultValidationTraces;
  ParamFlags translate_params;
  MinerFlags translate_miner;
  translate_cmd->add_option("model", source_path, "Source model file")->required();
  translate_cmd->add_option("--target", target_name, "Target paradigm: declare or imperative")
      ->check(CLI::IsMember({"declare", "imperative"}))
      ->capture_default_str();
  translate_cmd->add_option("-o,--output", out_path, "Target model file (default: stdout)");
  translate_cmd->add_option("--report", report_path, "Write the quality report as JSON");
  translate_cmd->add_option("--dot", dot_path, "Write the target model as a DOT graph");
  translate_cmd->add_option("--repeat", repeat, "Runs with seeds seed, seed+1, ...; prints mean scores")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  translate_cmd->add_option("--validation", validation, "Traces in the validation log")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  translate_params.add(translate_cmd);
  translate_miner.add(translate_cmd);

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Write an XES log simulated from a model");
  std::string sim_model, sim_out;
  ParamFlags sim_params;
  simulate_cmd->add_option("model", sim_model, "Model file")->required();
  simulate_cmd->add_option("-o,--output", sim_out, "XES file (default: stdout)");
  sim_params.add(simulate_cmd);

  // mine
  auto* mine_cmd = app.add_subcommand("mine", "Mine a model from an XES log");
  std::string mine_log, mine_target = "imperative", mine_out, mine_dot;
  MinerFlags mine_miner;
  mine_cmd->add_option("log", mine_log, "XES log")->required();
  mine_cmd->add_option("--target", mine_target, "Paradigm to mine: declare or imperative")
      ->check(CLI::IsMember({"declare", "imperative"}))
      ->capture_default_str();
  mine_cmd->add_option("-o,--output", mine_out, "Model file (default: stdout)");
  mine_cmd->add_option("--dot", mine_dot, "Write the mined model as a DOT graph");
  mine_miner.add(mine_cmd);

  // check
  auto* check_cmd = app.add_subcommand("check", "Score a model on a log, or compare two models");
  std::string check_model, check_other;
  std::size_t k = 0;
  check_cmd->add_option("model", check_model, "Model file")->required();
  check_cmd->add_option("other", check_other, "XES log (*.xes) or a second model file")
      ->required();
  check_cmd->add_option("--k", k, "Maximum trace length for model comparison (default: 2 * tasks)")
      ->check(CLI::PositiveNumber);

  // params
  auto* params_cmd = app.add_subcommand("params", "Lower bounds for N and L");
  std::uint64_t tasks = 0;
  std::optional<std::uint64_t> params_l;
  params_cmd->add_option("tasks", tasks, "Number of tasks |T|")->required()->check(CLI::PositiveNumber);
  params_cmd->add_option("--l", params_l, "Maximum trace length L (default: 2 * tasks)")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*translate_cmd) {
      const ProcessModel source = read_model_file(source_path);
      TranslateOptions options;
      options.target = target_of(target_name);
      options.trace_count = translate_params.n;
      options.max_length = translate_params.l;
      options.seed = translate_params.seed;
      options.cap = translate_params.cap;
      options.validation_traces = validation;
      const MinerConfig miner = translate_miner.load();
      options.fhm = miner.fhm;
      options.dmm = miner.dmm;

      const auto repeated = translate_repeated(source, options, repeat);
      const Translation& first = repeated.runs.front();
      std::ostream& log = (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
      emit(out_path, write_model(first.model));
      if (!dot_path.empty()) write_text_file(dot_path, export_dot(first.model));
      if (repeat == 1) {
        print_report(log, first.report);
        if (!report_path.empty()) write_text_file(report_path, report_json(first.report));
      } else {
        for (const auto& run : repeated.runs) {
          log << "seed " << run.report.params_used.seed << ": fitness = " << fixed(run.report.fitness)
              << ", appropriateness = " << fixed(run.report.appropriateness) << "\n";
        }
        log << "mean fitness = " << fixed(repeated.mean_fitness) << "\n"
            << "mean appropriateness = " << fixed(repeated.mean_appropriateness) << "\n";
        if (!report_path.empty()) write_text_file(report_path, report_json(repeated));
      }
    } else if (*simulate_cmd) {
      const ProcessModel model = read_model_file(sim_model);
      const auto params = resolve_params(model, sim_params.n, sim_params.l, sim_params.seed, sim_params.cap);
      const EventLog log = simulate(model, params);
      emit(sim_out, write_xes_string(log));
      (sim_out.empty() || sim_out == "-" ? std::cerr : std::cout)
          << "wrote " << log.traces.size() << " traces (N = " << params.trace_count
          << ", L = " << params.max_length << ", seed = " << params.seed << ")\n";
    } else if (*mine_cmd) {
      const auto read = read_xes_file(mine_log);
      if (read.warnings) std::cerr << "ignored " << read.warnings << " unsupported XES elements\n";
      const MinerConfig miner = mine_miner.load();
      const ProcessModel model = mine(read.log, target_of(mine_target), miner.fhm, miner.dmm);
      emit(mine_out, write_model(model));
      if (!mine_dot.empty()) write_text_file(mine_dot, export_dot(model));
    } else if (*check_cmd) {
      const ProcessModel model = read_model_file(check_model);
      if (is_log_path(check_other)) {
        const auto read = read_xes_file(check_other);
        if (read.warnings) std::cerr << "ignored " << read.warnings << " unsupported XES elements\n";
        QualityReport r = score(model, read.log);
        std::cout << "traces = " << read.log.traces.size() << "\n"
                  << "fitness = " << fixed(r.fitness) << "\n"
                  << "appropriateness = " << fixed(r.appropriateness) << "\n";
        if (r.skipped_for_appropriateness) {
          std::cout << "skipped for appropriateness = " << r.skipped_for_appropriateness << "\n";
        }
      } else {
        const ProcessModel other = read_model_file(check_other);
        const std::size_t bound = k ? k : min_trace_length(alphabet_of(model).size());
        const auto result = trace_equivalent_upto(model, other, bound);
        if (result.equal) {
          std::cout << "equal up to length " << bound << "\n";
        } else {
          std::cout << "not equal up to length " << bound << "\n";
          for (const auto& w : result.counterexamples) std::cout << "  " << render(w) << "\n";
        }
      }
    } else if (*params_cmd) {
      const std::uint64_t l = params_l ? *params_l : min_trace_length(tasks);
      std::cout << "L = " << l << (params_l ? "" : " (lower bound)") << "\n"
                << "N = " << min_trace_count(tasks, l) << " (lower bound)\n";
    }
  } catch (const Error& e) {
    std::cerr << "simmine: " << (e.stage().empty() ? "" : e.stage() + " ") << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "simmine: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
