#include <doctest.h>

#include <random>

#include "favourlab/error.hpp"
#include "favourlab/formula.hpp"
#include "favourlab/logic.hpp"
#include "oracles.hpp"

using namespace favourlab;
using favourlab::testing::brute_force_entails;
using favourlab::testing::random_formula;

namespace {
Formula at(const char* name) { return Formula::atom(name); }
Formula p(const char* text) { return parse_formula(text); }
}  // namespace

TEST_CASE("parse_formula builds the expected trees") {
  CHECK(p("emu | ostrich") == (at("emu") || at("ostrich")));
  CHECK(p("!a & b -> c") == implies(!at("a") && at("b"), at("c")));
  CHECK(p("emu -> bird") == implies(at("emu"), at("bird")));
  CHECK(p("true") == Formula::constant(true));
  CHECK(p("  ( false ) ") == Formula::constant(false));
}

TEST_CASE("precedence and associativity") {
  SUBCASE("implication is right-associative") {
    CHECK(p("a -> b -> c") == implies(at("a"), implies(at("b"), at("c"))));
  }
  SUBCASE("biconditional binds loosest and associates left") {
    CHECK(p("a <-> b -> c") == iff(at("a"), implies(at("b"), at("c"))));
    CHECK(p("a <-> b <-> c") == iff(iff(at("a"), at("b")), at("c")));
  }
  SUBCASE("and binds tighter than or") {
    CHECK(p("a | b & c") == (at("a") || (at("b") && at("c"))));
  }
  SUBCASE("chains are n-ary, parentheses keep nesting") {
    CHECK(p("a | b | c") == Formula::disjunction({at("a"), at("b"), at("c")}));
    CHECK(p("(a | b) | c") == ((at("a") || at("b")) || at("c")));
    CHECK_FALSE(p("(a | b) | c") == p("a | b | c"));
  }
  SUBCASE("double negation") { CHECK(p("!!a") == !!at("a")); }
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    FAIL("no syntax error for " << text);
    return 0;
  };
  CHECK(position_of("a &") == 3);
  CHECK(position_of("(a | b") == 6);
  CHECK(position_of("a b") == 2);
  CHECK(position_of("a % b") == 2);
  CHECK(position_of("   ") == 3);
  CHECK(position_of("A") == 0);
}

TEST_CASE("a fixed universe rejects unknown atoms") {
  Universe u({"bird", "fly"});
  CHECK(parse_formula("bird -> fly", u) == implies(at("bird"), at("fly")));
  CHECK_THROWS_AS(parse_formula("bird -> emu", u), UnknownAtomError);
  CHECK(parse_formula("true | bird", u) == (Formula::constant(true) || at("bird")));
}

TEST_CASE("atom names") {
  CHECK(is_valid_atom_name("c_1"));
  CHECK(is_valid_atom_name("c12"));
  CHECK_FALSE(is_valid_atom_name(""));
  CHECK_FALSE(is_valid_atom_name("true"));
  CHECK_FALSE(is_valid_atom_name("Bird"));
  CHECK_THROWS_AS(Formula::atom("false"), InvalidInput);
  CHECK_THROWS_AS(Universe({"a", "a"}), InvalidInput);
}

TEST_CASE("evaluate") {
  CHECK_FALSE(evaluate(p("bird -> fly"), {{"bird", true}, {"fly", false}}));
  CHECK(evaluate(p("emu | ostrich"), {{"emu", false}, {"ostrich", true}}));
  CHECK(evaluate(Formula::constant(true), {}));
  CHECK(evaluate(p("a <-> b"), {{"a", false}, {"b", false}}));
  CHECK_THROWS_AS(evaluate(p("a & b"), {{"a", true}}), UnknownAtomError);
}

TEST_CASE("compiled evaluation agrees with the name-keyed evaluator") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  Universe u(atoms);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = random_formula(rng, atoms, 4);
    CompiledFormula compiled(f, u);
    for (unsigned mask = 0; mask < 16; ++mask) {
      Valuation v;
      for (std::size_t i = 0; i < 4; ++i) v[atoms[i]] = (mask >> i) & 1U;
      CHECK(compiled.evaluate([mask](std::size_t i) { return ((mask >> i) & 1U) != 0; }) == evaluate(f, v));
    }
  }
}

TEST_CASE("entailment on the bird and emu examples") {
  std::vector<Formula> birds{p("bird"), p("bird -> fly"), p("emu -> !fly")};
  CHECK(entails(birds, p("!emu")));
  std::vector<Formula> polly{p("emu | ostrich"), p("ostrich -> run"), p("emu -> run")};
  CHECK(entails(polly, p("run")));
  std::vector<Formula> only_disjunction{p("emu | ostrich")};
  CHECK_FALSE(entails(only_disjunction, p("run")));
}

TEST_CASE("consistency") {
  std::vector<Formula> contradiction{p("fly"), p("!fly")};
  CHECK_FALSE(consistent(contradiction));
  CHECK(consistent(std::vector<Formula>{}));
  std::vector<Formula> birds{p("bird"), p("bird -> fly"), p("emu -> !fly")};
  CHECK(consistent(birds));
  // the model found by hand: bird, fly, !emu
  CHECK(evaluate(Formula::all_of(birds), {{"bird", true}, {"fly", true}, {"emu", false}}));
}

TEST_CASE("atom bound") {
  std::vector<Formula> wide;
  for (int i = 0; i < 21; ++i) wide.push_back(Formula::atom("x" + std::to_string(i)));
  CHECK_THROWS_AS(consistent(wide), BoundExceeded);
  wide.pop_back();
  CHECK(consistent(wide));
  CHECK_THROWS_AS(entails(wide, at("y"), 20), BoundExceeded);
  CHECK_THROWS_AS(entails(std::vector<Formula>{at("a")}, at("b"), 1), BoundExceeded);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> atoms{"a", "b", "c", "bird", "c_1"};
  for (int trial = 0; trial < 1000; ++trial) {
    Formula f = random_formula(rng, atoms, 5);
    INFO(f.to_string());
    CHECK(parse_formula(f.to_string()) == f);
  }
  CHECK(p("!a & b -> c").to_string() == "!a & b -> c");
  CHECK(implies(implies(at("a"), at("b")), at("c")).to_string() == "(a -> b) -> c");
  CHECK(iff(at("a"), iff(at("b"), at("c"))).to_string() == "a <-> (b <-> c)");
  CHECK((!(at("a") || at("b"))).to_string() == "!(a | b)");
}

TEST_CASE("entailment properties on random formula sets") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Formula> s;
    std::uniform_int_distribution<int> size(0, 3);
    for (int i = size(rng); i > 0; --i) s.push_back(random_formula(rng, atoms, 3));
    Formula f = random_formula(rng, atoms, 3);
    INFO(Formula::all_of(s).to_string(), " |= ", f.to_string());

    const bool e = entails(s, f);
    CHECK(e == brute_force_entails(s, f, atoms));
    CHECK((e && entails(s, !f)) == !consistent(s));

    std::vector<Formula> bigger = s;
    bigger.push_back(random_formula(rng, atoms, 2));
    if (e) CHECK(entails(bigger, f));
  }
}

TEST_CASE("De Morgan holds under evaluation") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    Formula x = random_formula(rng, atoms, 3), y = random_formula(rng, atoms, 3);
    for (unsigned mask = 0; mask < 8; ++mask) {
      Valuation v{{"a", (mask & 1U) != 0}, {"b", (mask & 2U) != 0}, {"c", (mask & 4U) != 0}};
      CHECK(evaluate(!(x && y), v) == evaluate(!x || !y, v));
    }
  }
}
