#include "doctest.h"
#include "simmine/semantics.hpp"
#include "support/oracle.hpp"

using namespace simmine;

namespace {

const std::vector<Activity> kABC = {"A", "B", "C"};

Constraint C2(Template t) { return make_constraint(t, "A", "B"); }

}  // namespace

TEST_CASE("evaluate: reference examples") {
  CHECK(evaluate(C2(Template::ChainSuccession), Word{"A", "B", "C"}) == Verdict{true, 2});
  CHECK_FALSE(evaluate(C2(Template::ChainSuccession), Word{"A", "C", "B"}).satisfied);
  CHECK(evaluate(C2(Template::ChainPrecedence), Word{"C", "C"}) == Verdict{true, 0});
}

TEST_CASE("model_satisfies") {
  DeclareModel m{{"A", "B", "C"}, {C2(Template::ChainSuccession)}};
  CHECK(model_satisfies(m, Word{"A", "B", "C", "A", "B"}));
  DeclareModel empty{{"A", "B", "C"}, {}};
  for (const auto& w : oracle::all_words(kABC, 3)) CHECK(model_satisfies(empty, w));
  DeclareModel both{{"A", "B", "C"},
                    {make_constraint(Template::Existence, "A"), make_constraint(Template::Existence, "C")}};
  CHECK_FALSE(model_satisfies(both, Word{"A", "B"}));
  CHECK_THROWS_WITH_AS(model_satisfies(m, Word{"A", "D"}), doctest::Contains("'D'"), Error);
}

TEST_CASE("evaluate agrees with the positional oracle on every word up to length 6") {
  const auto words = oracle::all_words(kABC, 6);
  for (const auto& c : oracle::all_instantiations(kABC)) {
    for (const auto& w : words) {
      if (evaluate(c, w).satisfied != oracle::holds(c, w)) {
        FAIL_CHECK(to_string(c) << " disagrees on a word of length " << w.size());
        break;
      }
    }
  }
}

TEST_CASE("activation counts") {
  const Word w = {"A", "B", "A", "C", "B", "B"};  // two a, three b
  CHECK(evaluate(make_constraint(Template::Existence, "A"), w).activations == 2);
  CHECK(evaluate(make_constraint(Template::Absence2, "B"), w).activations == 3);
  CHECK(evaluate(C2(Template::RespondedExistence), w).activations == 2);
  CHECK(evaluate(C2(Template::Response), w).activations == 2);
  CHECK(evaluate(C2(Template::ChainResponse), w).activations == 2);
  CHECK(evaluate(C2(Template::Precedence), w).activations == 3);
  CHECK(evaluate(C2(Template::ChainPrecedence), w).activations == 3);
  CHECK(evaluate(C2(Template::Succession), w).activations == 5);
  CHECK(evaluate(C2(Template::ChainSuccession), w).activations == 5);
  CHECK(evaluate(C2(Template::CoExistence), w).activations == 5);
  CHECK(evaluate(C2(Template::NotSuccession), w).activations == 5);
  CHECK(evaluate(C2(Template::NotChainSuccession), w).activations == 5);
}

TEST_CASE("vacuity: zero activations means satisfied for all but Existence, Init and End") {
  for (const auto& c : oracle::all_instantiations(kABC)) {
    const bool exempt = c.kind == Template::Existence || c.kind == Template::Init || c.kind == Template::End;
    if (exempt) continue;
    for (const auto& w : oracle::all_words(kABC, 4)) {
      const Verdict v = evaluate(c, w);
      if (v.activations == 0 && !v.satisfied) FAIL_CHECK(to_string(c) << " violated without activation");
    }
  }
}

TEST_CASE("Existence is preserved by extension") {
  const auto c = make_constraint(Template::Existence, "B");
  for (const auto& w : oracle::all_words(kABC, 4)) {
    if (!evaluate(c, w).satisfied) continue;
    for (const auto& a : kABC) {
      Word longer = w;
      longer.push_back(a);
      CHECK(evaluate(c, longer).satisfied);
    }
  }
}

TEST_CASE("enumerate_traces") {
  const std::vector<Activity> ab = {"A", "B"};
  const auto two = enumerate_traces(ab, 2);
  CHECK(two == std::vector<Word>{{}, {"A"}, {"B"}, {"A", "A"}, {"A", "B"}, {"B", "A"}, {"B", "B"}});
  CHECK(enumerate_traces(std::vector<Activity>{"A"}, 0) == std::vector<Word>{{}});
  CHECK(enumerate_traces(kABC, 3).size() == 40);
  CHECK(enumerate_traces(kABC, 6).size() == 1093);
  CHECK(bounded_word_count(3, 6) == 1093);
  CHECK(bounded_word_count(0, 5) == 1);
  CHECK(bounded_word_count(10, 40) == UINT64_MAX);
  CHECK_THROWS_WITH_AS(enumerate_traces(kABC, 3, 39), doctest::Contains("at least 40"), Error);
  const auto words = enumerate_traces(kABC, 4);
  CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
}
