#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "simmine/automata.hpp"
#include "simmine/bundled.hpp"
#include "simmine/io.hpp"
#include "simmine/simulation.hpp"
#include "support/generators.hpp"
#include "support/logs.hpp"

using namespace simmine;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("xes round trip") {
  SUBCASE("minimal") {
    EventLog log;
    Trace t;
    t.case_id = "case-7";
    t.append("A");
    log.traces.push_back(t);
    const std::string xml = write_xes_string(log);
    CHECK(xml.find("<string key=\"concept:name\" value=\"case-7\"/>") != std::string::npos);
    CHECK(count(xml, "<trace>") == 1);
    CHECK(count(xml, "<event>") == 1);
    const auto back = read_xes_string(xml);
    CHECK(back.log == log);
    CHECK(back.warnings == 0);
  }
  SUBCASE("lifecycles and escaping") {
    EventLog log = simulate_imperative(bundled::choice_loop(), {50, 6, 2});
    Trace odd;
    odd.case_id = "<\"odd\" & 'case'>";
    odd.append("x & <y>", Lifecycle::Start);
    odd.append("x & <y>");
    log.traces.push_back(odd);
    CHECK(read_xes_string(write_xes_string(log)).log == log);
  }
  SUBCASE("empty log") { CHECK(read_xes_string(write_xes_string(EventLog{})).log.traces.empty()); }
  SUBCASE("file") {
    const auto path = std::filesystem::temp_directory_path() / "simmine_io_test.xes";
    const auto log = testlog::of({{"A", "B"}, {"C"}});
    write_xes_file(log, path);
    CHECK(read_xes_file(path).log == log);
    std::filesystem::remove(path);
  }
}

TEST_CASE("xes reading is lenient about extras and strict about structure") {
  const std::string extras = R"(<?xml version="1.0" encoding="UTF-8"?>
<log xes.version="1.0">
  <extension name="Organizational" prefix="org" uri="http://www.xes-standard.org/org.xesext"/>
  <global scope="event"><string key="concept:name" value="x"/></global>
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="A"/>
      <string key="org:resource" value="bob"/>
    </event>
    <event>
      <string key="concept:name" value="B"/>
      <string key="lifecycle:transition" value="suspend"/>
    </event>
  </trace>
</log>)";
  const auto r = read_xes_string(extras);
  REQUIRE(r.log.traces.size() == 1);
  CHECK(completions(r.log.traces[0]) == Word{"A"});
  CHECK(r.warnings >= 3);

  CHECK(error_of([] { read_xes_string("<log><trace>"); }) != "");
  CHECK(error_of([] { read_xes_string("<notalog/>"); }) != "");
  const std::string nameless = "<log><trace><event><string key=\"x\" value=\"y\"/></event></trace></log>";
  CHECK(error_of([&] { read_xes_string(nameless); }).find("trace[1]/event[1]") != std::string::npos);
  try {
    read_xes_string("<log><trace>");
  } catch (const Error& e) {
    CHECK(e.stage() == "io");
  }
  CHECK_THROWS_AS(read_xes_file("/nonexistent/log.xes"), Error);
}

TEST_CASE("model text format") {
  SUBCASE("declare document") {
    const std::string text = write_model(bundled::chain_succession());
    CHECK(text.find("model declare") != std::string::npos);
    CHECK(text.find("constraint ChainSuccession \"A\" \"B\"") != std::string::npos);
    CHECK(read_model(text) == ProcessModel(bundled::chain_succession()));
  }
  SUBCASE("empty-constraint model is byte stable") {
    const DeclareModel free{{"A", "B", "C"}, {}};
    const std::string text = write_model(free);
    CHECK(write_model(read_model(text)) == text);
  }
  SUBCASE("imperative sequence") {
    const std::string text = write_model(bundled::sequence_abc());
    CHECK(text.find("model imperative") != std::string::npos);
    CHECK(count(text, "node ") == 5);
    CHECK(count(text, "edge ") == 4);
    CHECK(text.find("node t1 task \"A\"") != std::string::npos);
  }
  SUBCASE("every bundled model round trips") {
    for (const auto& [name, m] : bundled::all()) {
      CHECK_MESSAGE(read_model(write_model(m)) == m, name);
    }
    testgen::ImperativeGenerator gen(5);
    for (int i = 0; i < 20; ++i) {
      const ProcessModel m = gen.next();
      CHECK(read_model(write_model(m)) == m);
    }
  }
  SUBCASE("odd names") {
    const DeclareModel m{{"say \"hi\"", "back\\slash", "a b#c"},
                         {make_constraint(Template::Response, "say \"hi\"", "a b#c")}};
    CHECK(read_model(write_model(m)) == ProcessModel(m));
  }
  SUBCASE("parse errors name the line") {
    CHECK(error_of([] { read_model("model declare\nactivity \"A\"\nconstraint Bogus \"A\"\n"); }).find("line 3") !=
          std::string::npos);
    CHECK(error_of([] { read_model("model imperative\nnode s weird\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { read_model("activity \"A\"\n"); }) != "");
    CHECK(error_of([] { read_model("model declare\nactivity \"A\n"); }) != "");
    CHECK(error_of([] { read_model("model declare\nactivity \"A\"\nconstraint Response \"A\" \"Z\"\n"); }) != "");
    // Comments and blank lines are ignored.
    CHECK(read_model("# c\nmodel declare\n\nactivity \"A\"  # trailing\n") == ProcessModel(DeclareModel{{"A"}, {}}));
  }
}

TEST_CASE("dot export") {
  const std::string seq = export_dot(bundled::sequence_abc());
  CHECK(count(seq, "->") == 4);
  CHECK(count(seq, "shape=") == 5);
  CHECK(seq == export_dot(bundled::sequence_abc()));

  const std::string declare = export_dot(bundled::chain_succession());
  CHECK(declare.find("ChainSuccession") != std::string::npos);

  const Fsa cs = compile_model(bundled::chain_succession());
  REQUIRE(cs.state_count() == 2);
  const std::string fsa = export_dot(cs);
  CHECK(count(fsa, "doublecircle") == 1);
  CHECK(count(fsa, "->") == 3);  // A and C from the initial state, B back to it
}

TEST_CASE("report json") {
  QualityReport r;
  r.fitness = 1.0;
  r.appropriateness = 0.5;
  r.params_used = {1093, 6, 5};
  r.validation_traces = 10;
  r.trace_length_histogram = {{2, 3}, {3, 7}};
  const std::string json = report_json(r);
  CHECK(json.find("\"fitness\": 1.0") != std::string::npos);
  CHECK(json.find("\"trace_count\": 1093") != std::string::npos);
  CHECK(json.find("\"3\": 7") != std::string::npos);
  CHECK(json.back() == '\n');
}
