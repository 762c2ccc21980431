#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "favourlab/default_logic.hpp"
#include "favourlab/error.hpp"
#include "oracles.hpp"

using namespace favourlab;

namespace {
Formula p(const char* text) { return parse_formula(text); }

const char* kPollyPrerequisite = R"(
atoms: emu ostrich run
fact: emu | ostrich
default: ostrich : run / run
default: emu : run / run
)";

const char* kEmuPrerequisite = R"(
atoms: bird fly emu
fact: emu
fact: emu -> bird
default: bird : fly / fly
default: emu : !fly / !fly
)";

const char* kBirdPrerequisite = R"(
atoms: bird fly emu
fact: bird
fact: emu -> bird
default: bird : fly / fly
default: emu : !fly / !fly
)";

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::set<std::set<std::size_t>> generating_sets(const ExtensionSet& s) {
  std::set<std::set<std::size_t>> out;
  for (const auto& e : s.extensions) out.insert(as_set(e.generating()));
  return out;
}

// Extensions by trying every ordering of every subset against check_extension.
std::set<std::set<std::size_t>> brute_force_extensions(const DefaultTheory& t) {
  std::set<std::set<std::size_t>> out;
  const std::size_t m = t.rules.size();
  for (unsigned subset = 0; subset < (1U << m); ++subset) {
    std::vector<std::size_t> members;
    for (std::size_t r = 0; r < m; ++r)
      if ((subset >> r) & 1U) members.push_back(r);
    do {
      if (check_extension(t, members).empty()) {
        out.insert(as_set(members));
        break;
      }
    } while (std::next_permutation(members.begin(), members.end()));
  }
  return out;
}

DefaultTheory random_theory(std::mt19937_64& rng) {
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  DefaultTheory t;
  t.universe = Universe(atoms);
  std::uniform_int_distribution<int> facts(0, 2), rules(1, 5), coin(0, 2);
  do {
    t.facts.clear();
    for (int i = facts(rng); i > 0; --i) t.facts.push_back(testing::random_formula(rng, atoms, 2));
  } while (!consistent(t.facts));
  t.rules.clear();
  for (int i = rules(rng); i > 0; --i) {
    Formula pre = coin(rng) == 0 ? Formula::constant(true) : testing::random_formula(rng, atoms, 1);
    t.rules.push_back(DefaultRule::normal(pre, testing::random_formula(rng, atoms, 2)));
  }
  return t;
}
}  // namespace

TEST_CASE("parse_theory") {
  DefaultTheory t = parse_theory("default: ostrich : run / run\n");
  REQUIRE(t.rules.size() == 1);
  CHECK(t.rules[0] == DefaultRule{p("ostrich"), p("run"), p("run")});
  CHECK(t.universe.names() == std::vector<std::string>{"ostrich", "run"});

  t = parse_theory("default: true : (ostrich -> run) / (ostrich -> run)\n");
  CHECK(t.rules[0].is_prerequisite_free());
  CHECK(t.rules[0].consequent == p("ostrich -> run"));

  t = parse_theory(kEmuPrerequisite);
  CHECK(t.facts.size() == 2);
  CHECK(t.rules.size() == 2);
  CHECK(parse_theory(format_theory(t)).rules == t.rules);
}

TEST_CASE("parse_theory errors") {
  CHECK_THROWS_AS(parse_theory("default: a : b / c\n"), SyntaxError);
  CHECK_THROWS_AS(parse_theory("default: a : b\n"), SyntaxError);
  CHECK_THROWS_AS(parse_theory("rule: a : b / b\n"), SyntaxError);
  CHECK_THROWS_AS(parse_theory("fact: a &\n"), SyntaxError);
  CHECK_THROWS_AS(parse_theory("atoms: a\nfact: b\n"), SyntaxError);
  CHECK_THROWS_AS(parse_theory("fact: a\natoms: a\n"), SyntaxError);

  std::string many;
  for (int i = 0; i < 17; ++i) many += "default: a : x" + std::to_string(i) + " / x" + std::to_string(i) + "\n";
  CHECK_THROWS_AS(parse_theory(many), BoundExceeded);
  EngineLimits roomy;
  roomy.max_rules = 17;
  CHECK(parse_theory(many, roomy).rules.size() == 17);

  try {
    parse_theory("atoms: a b\nfact: a\nfact: a | (b\n");
    FAIL("expected error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(e.position() == 12);
  }
}

TEST_CASE("prerequisite form cannot reason by cases") {
  DefaultTheory t = parse_theory(kPollyPrerequisite);
  ExtensionSet s = compute_extensions(t);
  CHECK_FALSE(s.facts_inconsistent);
  REQUIRE(s.extensions.size() == 1);
  CHECK(s.extensions[0].generating().empty());
  CHECK_FALSE(s.extensions[0].entails(p("run")));
  CHECK_FALSE(query(t, p("run"), QueryMode::skeptical));
}

TEST_CASE("consequent form reasons by cases") {
  DefaultTheory t = to_consequent_form(parse_theory(kPollyPrerequisite));
  CHECK(t.rules[0] == DefaultRule::normal(Formula::constant(true), p("ostrich -> run")));
  CHECK(t.rules[1] == DefaultRule::normal(Formula::constant(true), p("emu -> run")));
  ExtensionSet s = compute_extensions(t);
  REQUIRE(s.extensions.size() == 1);
  CHECK(s.extensions[0].generating().size() == 2);
  CHECK(s.extensions[0].entails(p("run")));
  CHECK(query(t, p("run"), QueryMode::skeptical));
}

TEST_CASE("emu theory has two extensions") {
  DefaultTheory t = parse_theory(kEmuPrerequisite);
  ExtensionSet s = compute_extensions(t);
  REQUIRE(s.extensions.size() == 2);
  CHECK(s.extensions[0].generating() == std::vector<std::size_t>{0});
  CHECK(s.extensions[1].generating() == std::vector<std::size_t>{1});
  CHECK(s.extensions[0].entails(p("fly")));
  CHECK(s.extensions[1].entails(p("!fly")));
  CHECK(generating_sets(s) == brute_force_extensions(t));

  CHECK_FALSE(query(t, p("fly"), QueryMode::skeptical));
  CHECK(query(t, p("fly"), QueryMode::credulous));
  CHECK(query(t, p("true"), QueryMode::skeptical));
  CHECK(query(t, p("bird"), QueryMode::skeptical));
}

TEST_CASE("consequent-form bird theory derives !emu") {
  DefaultTheory t = to_consequent_form(parse_theory(kBirdPrerequisite));
  CHECK(query(t, p("!emu"), QueryMode::skeptical));
  CHECK(query(t, p("fly"), QueryMode::skeptical));
  // the prerequisite form draws no conclusion about emu
  CHECK_FALSE(query(parse_theory(kBirdPrerequisite), p("!emu"), QueryMode::credulous));
}

TEST_CASE("to_consequent_form leaves prerequisite-free rules and facts alone") {
  DefaultTheory t = parse_theory("fact: a\ndefault: true : b / b\ndefault: a : c / c\n");
  DefaultTheory u = to_consequent_form(t);
  CHECK(u.facts == t.facts);
  CHECK(u.rules[0] == t.rules[0]);
  CHECK(u.rules[1] == DefaultRule::normal(Formula::constant(true), p("a -> c")));
  CHECK(to_consequent_form(u).rules == u.rules);
}

TEST_CASE("inconsistent facts are reported, not silently trivial") {
  DefaultTheory t = parse_theory("fact: a\nfact: !a\ndefault: true : b / b\n");
  ExtensionSet s = compute_extensions(t);
  CHECK(s.facts_inconsistent);
  CHECK(s.extensions.empty());
  CHECK_THROWS_AS(query(t, p("b"), QueryMode::skeptical), InvalidInput);
}

TEST_CASE("no extension needs an ungrounded rule") {
  // b would justify itself only circularly
  DefaultTheory t = parse_theory("default: b : b / b\ndefault: true : a / a\n");
  ExtensionSet s = compute_extensions(t);
  REQUIRE(s.extensions.size() == 1);
  CHECK(s.extensions[0].generating() == std::vector<std::size_t>{1});
}

TEST_CASE("firing order respects prerequisites") {
  DefaultTheory t = parse_theory("fact: a\ndefault: b : c / c\ndefault: a : b / b\n");
  ExtensionSet s = compute_extensions(t);
  REQUIRE(s.extensions.size() == 1);
  CHECK(s.extensions[0].generating() == std::vector<std::size_t>{1, 0});
  CHECK(check_extension(t, {1, 0}).empty());
  CHECK_FALSE(check_extension(t, {0, 1}).empty());
  CHECK_FALSE(check_extension(t, {1}).empty());
  CHECK_FALSE(check_extension(t, {1, 1}).empty());
}

TEST_CASE("engine bounds") {
  DefaultTheory t;
  for (int i = 0; i < 21; ++i) t.universe.add("x" + std::to_string(i));
  t.rules.push_back(DefaultRule::normal(Formula::constant(true), p("x0")));
  CHECK_THROWS_AS(compute_extensions(t), BoundExceeded);
  EngineLimits tight;
  tight.max_rules = 0;
  CHECK_THROWS_AS(compute_extensions(parse_theory(kPollyPrerequisite), tight), BoundExceeded);
}

TEST_CASE("extension properties on random normal theories") {
  std::mt19937_64 rng(1980);
  for (int trial = 0; trial < 150; ++trial) {
    DefaultTheory t = random_theory(rng);
    INFO(format_theory(t));
    ExtensionSet s = compute_extensions(t);
    REQUIRE_FALSE(s.facts_inconsistent);
    CHECK_FALSE(s.extensions.empty());

    for (const auto& e : s.extensions) {
      CHECK(check_extension(t, e.generating()) == "");
      CHECK(consistent(e.base()));
    }
    for (std::size_t i = 0; i < s.extensions.size(); ++i)
      for (std::size_t j = i + 1; j < s.extensions.size(); ++j) {
        std::vector<Formula> both = s.extensions[i].base();
        both.insert(both.end(), s.extensions[j].base().begin(), s.extensions[j].base().end());
        CHECK_FALSE(consistent(both));
      }
    CHECK(generating_sets(s) == brute_force_extensions(t));

    std::vector<std::size_t> perm(t.rules.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DefaultTheory shuffled = t;
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled.rules[i] = t.rules[perm[i]];
    std::set<std::set<std::size_t>> relabelled;
    for (const auto& e : compute_extensions(shuffled).extensions) {
      std::set<std::size_t> original;
      for (std::size_t r : e.generating()) original.insert(perm[r]);
      relabelled.insert(original);
    }
    CHECK(relabelled == generating_sets(s));
  }
}

TEST_CASE("query modes") {
  CHECK(parse_query_mode("skeptical") == QueryMode::skeptical);
  CHECK(parse_query_mode("credulous") == QueryMode::credulous);
  CHECK_THROWS_AS(parse_query_mode("brave"), InvalidInput);
}
