#include <algorithm>

#include "doctest.h"
#include "simmine/automata.hpp"
#include "simmine/bundled.hpp"
#include "simmine/regex.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace simmine;

namespace {

const std::vector<Activity> kABC = {"A", "B", "C"};

std::set<Word> upto(const Fsa& f, std::size_t k) {
  auto v = language_upto(f, k);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("compile_constraint: reference examples") {
  const std::vector<Activity> ab = {"A", "B"};
  CHECK(upto(compile_constraint(make_constraint(Template::ChainSuccession, "A", "B"), ab), 2) ==
        std::set<Word>{{}, {"A", "B"}});

  const Fsa exists = compile_constraint(make_constraint(Template::Existence, "A"), std::vector<Activity>{"A"});
  CHECK_FALSE(exists.accepts(Word{}));
  CHECK(exists.accepts(Word{"A"}));
  CHECK(exists.accepts(Word{"A", "A"}));

  const Fsa init = compile_constraint(make_constraint(Template::Init, "A"), ab);
  for (const Word& w : {Word{"A"}, Word{"A", "B"}, Word{"A", "A"}}) CHECK(init.accepts(w));
  for (const Word& w : {Word{}, Word{"B"}, Word{"B", "A"}}) CHECK_FALSE(init.accepts(w));
}

TEST_CASE("every instantiation over {A,B,C} matches the oracle up to length 6") {
  const auto words = oracle::all_words(kABC, 6);
  for (const auto& c : oracle::all_instantiations(kABC)) {
    std::set<Word> expected;
    for (const auto& w : words) {
      if (oracle::holds(c, w)) expected.insert(w);
    }
    CHECK_MESSAGE(upto(compile_constraint(c, kABC), 6) == expected, to_string(c));
  }
}

TEST_CASE("compiled automata are minimal and canonical") {
  // Equal languages built along different routes compare equal.
  const Fsa direct = compile_constraint(make_constraint(Template::Succession, "A", "B"), kABC);
  const std::vector<Fsa> parts = {compile_constraint(make_constraint(Template::Response, "A", "B"), kABC),
                                  compile_constraint(make_constraint(Template::Precedence, "A", "B"), kABC)};
  CHECK(product(parts) == direct);
  CHECK(Fsa::universal(kABC).state_count() == 1);
  CHECK(Fsa(kABC).empty());
  // ChainSuccession(A,B): waiting for B after A is the only other state.
  CHECK(compile_constraint(make_constraint(Template::ChainSuccession, "A", "B"), kABC).state_count() == 2);
}

TEST_CASE("product: reference examples") {
  const std::vector<Activity> ab = {"A", "B"};
  const std::vector<Fsa> pair = {compile_constraint(make_constraint(Template::Existence, "A"), ab),
                                 compile_constraint(make_constraint(Template::ChainSuccession, "A", "B"), ab)};
  CHECK(upto(product(pair), 2) == std::set<Word>{{"A", "B"}});

  const Fsa single = compile_constraint(make_constraint(Template::NotSuccession, "B", "C"), kABC);
  CHECK(upto(product(std::vector<Fsa>{single}), 6) == upto(single, 6));

  const std::vector<Activity> a = {"A"};
  const std::vector<Fsa> once = {compile_constraint(make_constraint(Template::Existence, "A"), a),
                                 compile_constraint(make_constraint(Template::Absence2, "A"), a)};
  CHECK(upto(product(once), 3) == std::set<Word>{{"A"}});

  CHECK_THROWS_AS(product(std::vector<Fsa>{}), Error);
  CHECK_THROWS_AS(product(std::vector<Fsa>{Fsa::universal(a), Fsa::universal(ab)}), Error);
}

TEST_CASE("product soundness on random triples") {
  Rng rng(31);
  const auto all = oracle::all_instantiations(kABC);
  for (int round = 0; round < 40; ++round) {
    std::vector<Fsa> parts;
    std::set<Word> expected = upto(Fsa::universal(kABC), 5);
    for (int i = 0; i < 3; ++i) {
      const Fsa f = compile_constraint(all[rng.uniform(all.size())], kABC);
      std::set<Word> keep;
      for (const auto& w : upto(f, 5)) {
        if (expected.contains(w)) keep.insert(w);
      }
      expected = std::move(keep);
      parts.push_back(f);
    }
    CHECK(upto(product(parts), 5) == expected);
  }
}

TEST_CASE("language_upto: reference examples") {
  DeclareModel abc = bundled::declare_abc();
  CHECK(upto(compile_model(abc), 3) == std::set<Word>{{"A", "B", "C"}});
  DeclareModel free_c{{"C"}, {}};
  CHECK(language_upto(compile_model(free_c), 2) == std::vector<Word>{{}, {"C"}, {"C", "C"}});
  for (const auto& c : oracle::all_instantiations(kABC)) {
    const Fsa f = compile_constraint(c, kABC);
    const auto zero = language_upto(f, 0);
    CHECK(zero.size() == (f.accepting(f.initial()) ? 1u : 0u));
  }
  CHECK_THROWS_AS(language_upto(Fsa::universal(kABC), 6, 100), Error);
}

TEST_CASE("random_accepting_walk") {
  SUBCASE("single path") {
    DeclareModel abc = bundled::declare_abc();
    const Fsa f = compile_model(abc);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      CHECK(random_accepting_walk(f, 3, rng) == Word{"A", "B", "C"});
    }
  }
  SUBCASE("empty word only") {
    const std::vector<Activity> a = {"A"};
    const Fsa eps = compile_constraint(make_constraint(Template::ChainSuccession, "A", "B"), std::vector<Activity>{"A", "B"});
    const std::vector<Fsa> parts = {eps, compile_constraint(make_constraint(Template::ChainPrecedence, "B", "A"),
                                                            std::vector<Activity>{"A", "B"})};
    const Fsa only_empty = product(parts);
    REQUIRE(upto(only_empty, 4) == std::set<Word>{{}});
    Rng rng(3);
    CHECK(random_accepting_walk(only_empty, 5, rng).empty());
  }
  SUBCASE("walks satisfy the model and lie in the bounded language") {
    const Fsa f = compile_model(bundled::chain_succession());
    const auto bounded = upto(f, 6);
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
      const Word w = random_accepting_walk(f, 6, rng);
      CHECK(w.size() <= 6);
      CHECK(oracle::holds(make_constraint(Template::ChainSuccession, "A", "B"), w));
      CHECK(bounded.contains(w));
    }
  }
  SUBCASE("deterministic per seed") {
    const Fsa f = compile_model(bundled::chain_precedence());
    Rng x(9), y(9);
    for (int i = 0; i < 50; ++i) CHECK(random_accepting_walk(f, 6, x) == random_accepting_walk(f, 6, y));
  }
  SUBCASE("no word within the bound") {
    DeclareModel abc = bundled::declare_abc();
    Rng rng(1);
    CHECK_THROWS_WITH_AS(random_accepting_walk(compile_model(abc), 2, rng), doctest::Contains("2"), Error);
  }
}

TEST_CASE("with_alphabet keeps the language") {
  const Fsa f = compile_constraint(make_constraint(Template::Response, "A", "B"), std::vector<Activity>{"A", "B"});
  const Fsa g = f.with_alphabet(kABC);
  for (const auto& w : oracle::all_words(kABC, 4)) {
    const bool uses_c = std::find(w.begin(), w.end(), "C") != w.end();
    CHECK(g.accepts(w) == (!uses_c && f.accepts(w)));
  }
}

TEST_CASE("regex rendering names the symbols") {
  const Regex r = Regex::concat({Regex::symbol(0), Regex::star(Regex::symbol(1))});
  CHECK(r.render(kABC).find('A') != std::string::npos);
  CHECK(r.render(kABC).find('B') != std::string::npos);
}
