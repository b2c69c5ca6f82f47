#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "simmine/bundled.hpp"
#include "simmine/conformance.hpp"
#include "simmine/io.hpp"
#include "simmine/mining.hpp"
#include "simmine/simulation.hpp"
#include "simmine/translate.hpp"

namespace py = pybind11;
using namespace simmine;

namespace {

Paradigm paradigm_arg(const std::string& name) {
  auto p = parse_paradigm(name);
  if (!p) throw py::value_error("target must be 'declare' or 'imperative', not '" + name + "'");
  return *p;
}

MinerConfig miner_config(const py::dict& settings) {
  std::string text;
  for (const auto& [key, value] : settings) {
    std::string v = py::isinstance<py::bool_>(value) ? (value.cast<bool>() ? "true" : "false") : std::string(py::str(value));
    text += std::string(py::str(key)) + " = " + v + "\n";
  }
  return read_miner_config(text);
}

py::dict report_dict(const QualityReport& r) {
  py::dict histogram;
  for (const auto& [length, count] : r.trace_length_histogram) histogram[py::int_(length)] = count;
  py::dict out;
  out["fitness"] = r.fitness;
  out["appropriateness"] = r.appropriateness;
  out["trace_count"] = r.params_used.trace_count;
  out["max_length"] = r.params_used.max_length;
  out["seed"] = r.params_used.seed;
  out["validation_traces"] = r.validation_traces;
  out["skipped_for_appropriateness"] = r.skipped_for_appropriateness;
  out["trace_length_histogram"] = histogram;
  return out;
}

// Opaque holder: pybind11's variant caster would otherwise unpack the model.
struct Model {
  ProcessModel value;
};

py::int_ big(const BigCount& n) { return py::int_(py::str(n.str())); }

}  // namespace

PYBIND11_MODULE(_simmine, m) {
  m.doc() = "Translation between Declare and imperative process models";

  static py::exception<Error> error(m, "SimmineError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::handle(error.ptr())(py::str(e.what()));
      instance.attr("stage") = e.stage();
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<Model>(m, "Model")
      .def_property_readonly("paradigm", [](const Model& x) { return std::string(paradigm_name(paradigm_of(x.value))); })
      .def_property_readonly("alphabet", [](const Model& x) { return alphabet_of(x.value); })
      .def("to_text", [](const Model& x) { return write_model(x.value); })
      .def("to_dot", [](const Model& x) { return export_dot(x.value); })
      .def("save", [](const Model& x, const std::filesystem::path& path) { write_model_file(x.value, path); })
      .def("__eq__", [](const Model& a, const Model& b) { return a.value == b.value; })
      .def("__repr__", [](const Model& x) {
        return "<simmine.Model " + std::string(paradigm_name(paradigm_of(x.value))) + " over " +
               std::to_string(alphabet_of(x.value).size()) + " activities>";
      });

  py::class_<EventLog>(m, "Log")
      .def("__len__", [](const EventLog& log) { return log.traces.size(); })
      .def("traces", [](const EventLog& log) {
        std::vector<Word> out;
        for (const auto& t : log.traces) out.push_back(completions(t));
        return out;
      }, "Activity executions of every trace.")
      .def("events", [](const EventLog& log) {
        std::vector<std::vector<std::pair<Activity, std::string>>> out;
        for (const auto& t : log.traces) {
          auto& events = out.emplace_back();
          for (const auto& e : t.events) events.emplace_back(e.activity, std::string(lifecycle_name(e.lifecycle)));
        }
        return out;
      }, "(activity, lifecycle) pairs of every trace.")
      .def("to_xes", [](const EventLog& log) { return write_xes_string(log); })
      .def("save", [](const EventLog& log, const std::filesystem::path& path) { write_xes_file(log, path); })
      .def("__eq__", [](const EventLog& a, const EventLog& b) { return a == b; });

  m.def("read_model", [](const std::string& text) { return Model{read_model(text)}; }, py::arg("text"));
  m.def("load_model", [](const std::filesystem::path& path) { return Model{read_model_file(path)}; }, py::arg("path"));
  m.def("read_xes", [](const std::string& text) { return read_xes_string(text).log; }, py::arg("text"));
  m.def("load_xes", [](const std::filesystem::path& path) { return read_xes_file(path).log; }, py::arg("path"));
  m.def("log_from_traces", [](const std::vector<Word>& words) {
    EventLog log;
    for (const auto& w : words) {
      Trace t;
      t.case_id = "case-" + std::to_string(log.traces.size() + 1);
      for (const auto& a : w) t.append(a);
      log.traces.push_back(std::move(t));
    }
    return log;
  }, py::arg("traces"), "A log of complete events, one trace per word.");

  m.def("bundled_names", [] {
    std::vector<std::string> names;
    for (const auto& [name, model] : bundled::all()) names.push_back(name);
    return names;
  });
  m.def("bundled", [](const std::string& name) {
    auto all = bundled::all();
    auto it = all.find(name);
    if (it == all.end()) throw py::key_error(name);
    return Model{it->second};
  }, py::arg("name"));

  m.def("params", [](std::uint64_t tasks, std::optional<std::uint64_t> max_length) {
    const std::uint64_t l = max_length ? *max_length : min_trace_length(tasks);
    return py::make_tuple(l, big(min_trace_count(tasks, l)));
  }, py::arg("tasks"), py::arg("max_length") = py::none(), "Lower bounds (L, N).");

  m.def("simulate", [](const Model& model, std::optional<std::uint64_t> n, std::optional<std::uint64_t> l,
                       std::uint64_t seed, std::uint64_t cap) {
    py::gil_scoped_release release;
    return simulate(model.value, resolve_params(model.value, n, l, seed, cap));
  }, py::arg("model"), py::arg("n") = py::none(), py::arg("l") = py::none(), py::arg("seed") = 0,
        py::arg("cap") = kDefaultTraceCap);

  m.def("mine", [](const EventLog& log, const std::string& target, const py::dict& settings) {
    const MinerConfig config = miner_config(settings);
    const Paradigm p = paradigm_arg(target);
    py::gil_scoped_release release;
    return Model{mine(log, p, config.fhm, config.dmm)};
  }, py::arg("log"), py::arg("target"), py::arg("settings") = py::dict());

  m.def("fitness", [](const Model& model, const EventLog& log) { return fitness(model.value, log); },
        py::arg("model"), py::arg("log"));
  m.def("appropriateness", [](const Model& model, const EventLog& log) { return appropriateness(model.value, log); },
        py::arg("model"), py::arg("log"));
  m.def("equivalent", [](const Model& a, const Model& b, std::size_t k) {
    const auto r = trace_equivalent_upto(a.value, b.value, k);
    return py::make_tuple(r.equal, r.counterexamples);
  }, py::arg("a"), py::arg("b"), py::arg("k"), "(equal, counterexamples) up to length k.");

  m.def("translate", [](const Model& source, const std::string& target, std::optional<std::uint64_t> n,
                        std::optional<std::uint64_t> l, std::uint64_t seed, std::uint64_t cap,
                        std::uint64_t validation_traces, const py::dict& settings) {
    TranslateOptions options;
    options.target = paradigm_arg(target);
    options.trace_count = n;
    options.max_length = l;
    options.seed = seed;
    options.cap = cap;
    options.validation_traces = validation_traces;
    const MinerConfig config = miner_config(settings);
    options.fhm = config.fhm;
    options.dmm = config.dmm;
    Translation t;
    {
      py::gil_scoped_release release;
      t = translate(source.value, options);
    }
    return py::make_tuple(Model{t.model}, report_dict(t.report));
  }, py::arg("source"), py::arg("target"), py::arg("n") = py::none(), py::arg("l") = py::none(),
        py::arg("seed") = 0, py::arg("cap") = kDefaultTraceCap, py::arg("validation_traces") = kDefaultValidationTraces,
        py::arg("settings") = py::dict());
}
