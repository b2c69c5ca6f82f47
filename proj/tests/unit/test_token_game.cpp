#include "doctest.h"
#include "simmine/bundled.hpp"
#include "simmine/token_game.hpp"
#include "support/generators.hpp"

using namespace simmine;

namespace {

ImperativeModel parallel_bc() {
  ImperativeModel m;
  m.add_node("start", NodeKind::Start);
  m.add_node("end", NodeKind::End);
  m.add_node("t1", NodeKind::Task, "A");
  m.add_node("t2", NodeKind::Task, "B");
  m.add_node("t3", NodeKind::Task, "C");
  m.add_node("g1", NodeKind::AndSplit);
  m.add_node("g2", NodeKind::AndJoin);
  m.add_edge("start", "t1");
  m.add_edge("t1", "g1");
  m.add_edge("g1", "t2");
  m.add_edge("g1", "t3");
  m.add_edge("t2", "g2");
  m.add_edge("t3", "g2");
  m.add_edge("g2", "end");
  return m;
}

std::set<Word> upto(const Fsa& f, std::size_t k) {
  auto v = language_upto(f, k);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("token net structure") {
  const TokenNet net(bundled::sequence_abc());
  CHECK(net.place_count() == 5);  // four flows plus the source
  CHECK(net.transitions().size() == 5);
  CHECK(net.alphabet() == std::vector<Activity>{"A", "B", "C"});
  CHECK(net.labelled("B").size() == 1);
  CHECK(net.labelled("Z").empty());
  Marking m = net.initial_marking();
  CHECK(m[net.source_place()] == 1);
}

TEST_CASE("behaviour automaton languages") {
  CHECK(upto(behaviour_automaton(bundled::sequence_abc()).fsa, 5) == std::set<Word>{{"A", "B", "C"}});
  CHECK(upto(behaviour_automaton(parallel_bc()).fsa, 5) ==
        std::set<Word>{{"A", "B", "C"}, {"A", "C", "B"}});
  const Fsa loop = behaviour_automaton(bundled::choice_loop()).fsa;
  CHECK(loop.accepts(Word{"A", "B"}));
  CHECK(loop.accepts(Word{"A", "C", "A", "B"}));
  CHECK_FALSE(loop.accepts(Word{}));
  CHECK_FALSE(loop.accepts(Word{"A", "B", "C"}));
  const Fsa cs = behaviour_automaton(bundled::chain_succession_imperative()).fsa;
  CHECK(cs.accepts(Word{}));
  CHECK(cs.accepts(Word{"C", "A", "B"}));
  CHECK_FALSE(cs.accepts(Word{"A", "C", "B"}));
}

TEST_CASE("behaviour automaton agrees with depth-first token-game search") {
  testgen::ImperativeGenerator gen(99);
  for (int i = 0; i < 25; ++i) {
    const ImperativeModel m = gen.next();
    const auto b = behaviour_automaton(m);
    CHECK_FALSE(b.truncated);
    CHECK(upto(b.fsa, 5) == testgen::imperative_language(m, 5));
  }
}

TEST_CASE("behaviour automaton rejects invalid models and reports size limits") {
  ImperativeModel broken;
  CHECK_THROWS_AS(behaviour_automaton(broken), Error);
  CHECK_THROWS_AS(behaviour_automaton(parallel_bc(), ExploreLimits{3, 3}), Error);
}

TEST_CASE("token replay") {
  const ImperativeModel seq = bundled::sequence_abc();
  const TokenNet net(seq);
  SUBCASE("perfect trace") {
    const auto r = token_replay(net, Word{"A", "B", "C"});
    CHECK(r.missing == 0);
    CHECK(r.remaining == 0);
    CHECK(r.fitness() == 1.0);
  }
  SUBCASE("skipped task") {
    // C misses its token, B's input stays marked, end still consumes once.
    const auto r = token_replay(net, Word{"A", "C"});
    CHECK(r.missing == 1);
    CHECK(r.remaining == 1);
    CHECK(r.produced == 4);
    CHECK(r.consumed == 4);
    CHECK(r.fitness() == 0.75);
  }
  SUBCASE("unknown activity") {
    const auto r = token_replay(net, Word{"A", "X", "B", "C"});
    CHECK(r.missing == 1);
    CHECK(r.remaining == 1);
    // produced: initial 1 + start,A,B,C 4 + X 1; consumed: start,A,B,C,end 5 + X 1
    CHECK(r.produced == 6);
    CHECK(r.consumed == 6);
    CHECK(r.fitness() == doctest::Approx(5.0 / 6.0));
  }
  SUBCASE("silent gateways are fired on demand") {
    const TokenNet loop(bundled::choice_loop());
    CHECK(token_replay(loop, Word{"A", "C", "A", "B"}).fitness() == 1.0);
    const TokenNet par(parallel_bc());
    CHECK(token_replay(par, Word{"A", "C", "B"}).fitness() == 1.0);
  }
}
