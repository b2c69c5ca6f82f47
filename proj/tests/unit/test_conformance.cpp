#include "doctest.h"
#include "simmine/bundled.hpp"
#include "simmine/conformance.hpp"
#include "simmine/mining.hpp"
#include "simmine/simulation.hpp"
#include "support/generators.hpp"
#include "support/logs.hpp"
#include "support/oracle.hpp"

using namespace simmine;

namespace {

ImperativeModel sequence(const std::vector<Activity>& labels) {
  ImperativeModel m;
  m.add_node("start", NodeKind::Start);
  m.add_node("end", NodeKind::End);
  NodeId prev = "start";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const NodeId id = "t" + std::to_string(i + 1);
    m.add_node(id, NodeKind::Task, labels[i]);
    m.add_edge(prev, id);
    prev = id;
  }
  m.add_edge(prev, "end");
  return m;
}

}  // namespace

TEST_CASE("fitness: reference examples") {
  const auto abc = testlog::of({{"A", "B", "C"}}, 10);
  CHECK(fitness(bundled::sequence_abc(), abc) == 1.0);
  CHECK(fitness(bundled::declare_abc(), abc) == 1.0);

  const DeclareModel half{{"A", "B", "C"},
                          {make_constraint(Template::ChainSuccession, "A", "B"), make_constraint(Template::Existence, "C")}};
  CHECK(fitness(half, testlog::of({{"A", "B"}})) == 0.5);
  CHECK(fitness(DeclareModel{{"A", "B", "C"}, {}}, testlog::of({{"C", "A"}, {"B"}})) == 1.0);

  // Unknown activities are replay failures, not errors.
  CHECK(fitness(bundled::chain_succession(), testlog::of({{"A", "B"}, {"Z"}})) == 0.5);
  CHECK(fitness(bundled::sequence_abc(), testlog::of({{"A", "X", "B", "C"}})) == doctest::Approx(5.0 / 6.0));
  CHECK(fitness(bundled::sequence_abc(), testlog::of({{"C", "B", "A"}})) < 1.0);

  CHECK_THROWS_AS(fitness(bundled::sequence_abc(), EventLog{}), Error);
}

TEST_CASE("fitness is 1 on logs simulated from the model") {
  testgen::ImperativeGenerator gen(21);
  for (int i = 0; i < 10; ++i) {
    const auto m = gen.next();
    const auto log = simulate_imperative(m, {200, min_trace_length(m.alphabet().size()), 4});
    CHECK(fitness(m, log) == 1.0);
    const double app = appropriateness(m, log);
    CHECK(app >= 0.0);
    CHECK(app <= 1.0);
  }
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto d = testgen::random_declare(rng, 5);
    CHECK(fitness(d, simulate_declare(d, {200, 5, 4})) == 1.0);
  }
}

TEST_CASE("appropriateness: reference examples") {
  CHECK(appropriateness(bundled::sequence_abc(), testlog::of({{"A", "B", "C"}})) == 1.0);
  CHECK(appropriateness(bundled::declare_abc(), testlog::of({{"A", "B", "C"}})) == 1.0);

  // One state allowing A, B, C and stop; the log shows A and stop there.
  const DeclareModel free{{"A", "B", "C"}, {}};
  CHECK(appropriateness(free, testlog::of({{"A"}})) == 0.5);
  CHECK(appropriateness(free, testlog::of({{"A", "B", "C"}, {}})) == 1.0);

  const auto mined = mine_imperative(simulate_imperative(bundled::choice_loop(), {500, 6, 1}));
  CHECK(appropriateness(mined, simulate_imperative(bundled::choice_loop(), {500, 6, 2})) == 1.0);

  const auto detail = appropriateness_detail(bundled::sequence_abc(), testlog::of({{"A", "B", "C"}, {"B"}}));
  CHECK(detail.skipped == 1);
  CHECK(detail.value == 1.0);
  CHECK(appropriateness(bundled::sequence_abc(), testlog::of({{"B"}})) == 0.0);
}

TEST_CASE("appropriateness is 1 for a loop-free model against its whole bounded language") {
  testgen::ImperativeGenerator gen(3);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 10; ++i) {
    const auto m = gen.next();
    const auto words = testgen::imperative_language(m, 8);
    if (words.empty() || words.size() > 500) continue;
    // Loop-free: the language up to 8 equals the language up to 12.
    if (testgen::imperative_language(m, 12) != words) continue;
    CHECK(appropriateness(m, testlog::of(std::vector<Word>(words.begin(), words.end()))) == 1.0);
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("trace_equivalent_upto") {
  const auto acb = sequence({"A", "C", "B"});
  const auto r = trace_equivalent_upto(bundled::sequence_abc(), acb, 3);
  CHECK_FALSE(r.equal);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front() == Word{"A", "B", "C"});
  CHECK(r.counterexamples == std::vector<Word>{{"A", "B", "C"}, {"A", "C", "B"}});

  CHECK(trace_equivalent_upto(bundled::chain_succession(), bundled::chain_succession_imperative(), 4).equal);
  CHECK(trace_equivalent_upto(bundled::sequence_abc(), bundled::declare_abc(), 5).equal);
  CHECK(trace_equivalent_upto(bundled::choice_loop(), bundled::choice_loop(), 6).equal);
  // Differences longer than k are invisible.
  CHECK(trace_equivalent_upto(bundled::sequence_abc(), acb, 2).equal);

  const DeclareModel free{{"A", "B", "C"}, {}};
  const auto many = trace_equivalent_upto(free, bundled::sequence_abc(), 3);
  CHECK(many.counterexamples.size() == 10);
  CHECK(many.counterexamples.front().empty());

  CHECK_THROWS_AS(trace_equivalent_upto(free, free, 0), Error);
  CHECK_THROWS_AS(trace_equivalent_upto(free, free, 12, 1000), Error);
}

TEST_CASE("trace_equivalent_upto is symmetric, reflexive and downward closed") {
  Rng rng(17);
  std::vector<ProcessModel> models;
  for (int i = 0; i < 6; ++i) models.emplace_back(testgen::random_declare(rng, 4));
  for (const auto& [name, m] : bundled::all()) {
    if (alphabet_of(m) == std::set<Activity>{"A", "B", "C"}) models.push_back(m);
  }
  for (const auto& a : models) {
    CHECK(trace_equivalent_upto(a, a, 4).equal);
    for (const auto& b : models) {
      const auto ab = trace_equivalent_upto(a, b, 4);
      CHECK(ab.equal == trace_equivalent_upto(b, a, 4).equal);
      if (ab.equal) CHECK(trace_equivalent_upto(a, b, 3).equal);
      for (const auto& w : ab.counterexamples) CHECK(w.size() <= 4);
    }
  }
}

TEST_CASE("language_automaton agrees with Declare semantics") {
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto d = testgen::random_declare(rng, 4);
    const Fsa f = language_automaton(d);
    const auto expected = oracle::bounded_language(d, 4);
    auto got = language_upto(f, 4);
    CHECK(std::set<Word>(got.begin(), got.end()) == expected);
  }
}
