#pragma once

// Test-only reference computations. Nothing here calls World, the compiled
// evaluator or the truth-table procedures under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "favourlab/formula.hpp"
#include "favourlab/paradox.hpp"
#include "favourlab/rational.hpp"

namespace favourlab::testing {

/// A student of the arts/science scenario, written out individually.
struct Student {
  bool science;
  bool in_c1;
  bool in_c2;
};

/// Three science students in both classes, two arts students per class, and
/// `extra` science students in neither.
inline std::vector<Student> two_class_roster(int extra = 1) {
  std::vector<Student> roster;
  for (int i = 0; i < 3; ++i) roster.push_back({true, true, true});
  for (int i = 0; i < 2; ++i) roster.push_back({false, true, false});
  for (int i = 0; i < 2; ++i) roster.push_back({false, false, true});
  for (int i = 0; i < extra; ++i) roster.push_back({true, false, false});
  return roster;
}

/// Fraction of the students satisfying `given` that also satisfy `event`.
inline Rational roster_fraction(const std::vector<Student>& roster,
                                const std::function<bool(const Student&)>& event,
                                const std::function<bool(const Student&)>& given = [](const Student&) { return true; }) {
  std::int64_t hits = 0, total = 0;
  for (const Student& s : roster) {
    if (!given(s)) continue;
    ++total;
    if (event(s)) ++hits;
  }
  return Rational(Integer(hits), Integer(total));
}

/// p(event | given) on a cell table by summing raw counts, with formulas
/// evaluated through the name-keyed evaluator. nullopt for zero mass.
inline std::optional<Rational> cell_conditional(const CellTable& t, const Formula& event, const Formula& given) {
  std::int64_t hits = 0, total = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Valuation v{{t.atoms[0], a == 1}, {t.atoms[1], b == 1}, {t.atoms[2], c == 1}};
        std::int64_t n = t.at(a, b, c);
        if (!evaluate(given, v)) continue;
        total += n;
        if (evaluate(event, v)) hits += n;
      }
  if (total == 0) return std::nullopt;
  return Rational(Integer(hits), Integer(total));
}

/// All assignments over `atoms`, enumerated by the map-based evaluator.
inline bool brute_force_entails(const std::vector<Formula>& premises, const Formula& conclusion,
                                const std::vector<std::string>& atoms) {
  for (std::uint32_t mask = 0; mask < (1U << atoms.size()); ++mask) {
    Valuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (mask >> i) & 1U;
    bool all = std::all_of(premises.begin(), premises.end(), [&](const Formula& p) { return evaluate(p, v); });
    if (all && !evaluate(conclusion, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generators

inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> k(0, 9);
      if (k(rng) == 0) return Formula::constant(k(rng) % 2 == 0);
      [[fallthrough]];
    }
    case 1: {
      std::uniform_int_distribution<std::size_t> which(0, atoms.size() - 1);
      return Formula::atom(atoms[which(rng)]);
    }
    case 2: return Formula::negation(random_formula(rng, atoms, depth - 1));
    case 3:
    case 4: {
      std::uniform_int_distribution<int> width(2, 3);
      std::vector<Formula> ops;
      for (int i = width(rng); i > 0; --i) ops.push_back(random_formula(rng, atoms, depth - 1));
      return pick(rng) % 2 ? Formula::conjunction(ops) : Formula::disjunction(ops);
    }
    case 5:
    case 6: return Formula::implication(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
    default: return Formula::biconditional(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
  }
}

/// Counts drawn from 0..9; never all zero.
inline CellTable random_cells(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> count(0, 9);
  CellTable t;
  do {
    for (auto& n : t.counts) n = count(rng);
  } while (t.total() == 0);
  return t;
}

}  // namespace favourlab::testing

namespace favourlab::testing {

/// Pattern test on a cell table by raw counting, for cross-checking the
/// searcher and checkers.
inline bool oracle_pattern(const CellTable& t, SearchPattern pattern) {
  const Formula a = Formula::atom(t.atoms[0]), b = Formula::atom(t.atoms[1]), c = Formula::atom(t.atoms[2]);
  const Formula yes = Formula::constant(true);
  auto pa = cell_conditional(t, a, yes);
  if (!pa) return false;
  if (pattern == SearchPattern::simpson) {
    auto x1 = cell_conditional(t, a, b && c), y1 = cell_conditional(t, a, c);
    auto x2 = cell_conditional(t, a, b && !c), y2 = cell_conditional(t, a, !c);
    auto x3 = cell_conditional(t, a, b);
    return x1 && y1 && x2 && y2 && x3 && *x1 > *y1 && *x2 > *y2 && *x3 < *pa;
  }
  if (pa->is_zero()) return false;
  auto gb = cell_conditional(t, a, b), gc = cell_conditional(t, a, c);
  auto gx = cell_conditional(t, a, pattern == SearchPattern::chung_conjunctive ? (b && c) : (b || c));
  return gb && gc && gx && *gb > *pa && *gc > *pa && *gx < *pa;
}

/// Tables where a and b never co-occur and c separately raises both, drawn
/// with weights 0..9 and rejection.
inline CellTable exclusive_favoured_sample(std::mt19937_64& rng) {
  const Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  const Formula yes = Formula::constant(true);
  for (;;) {
    CellTable t = random_cells(rng);
    t.counts[CellTable::index(true, true, true)] = 0;
    t.counts[CellTable::index(true, true, false)] = 0;
    if (t.total() == 0) continue;
    auto pa = cell_conditional(t, a, yes), pb = cell_conditional(t, b, yes);
    auto ac = cell_conditional(t, a, c), bc = cell_conditional(t, b, c);
    if (ac && bc && *ac > *pa && *bc > *pb) return t;
  }
}

/// Tables where b and c each raise a. A quarter of the draws empty the b&c
/// cells so the zero-overlap branch is exercised.
inline CellTable doubly_favoured_sample(std::mt19937_64& rng, bool empty_overlap) {
  const Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  const Formula yes = Formula::constant(true);
  for (;;) {
    CellTable t = random_cells(rng);
    if (empty_overlap) {
      t.counts[CellTable::index(true, true, true)] = 0;
      t.counts[CellTable::index(false, true, true)] = 0;
    }
    if (t.total() == 0) continue;
    auto pa = cell_conditional(t, a, yes);
    auto ab = cell_conditional(t, a, b), ac = cell_conditional(t, a, c);
    if (pa->sign() > 0 && ab && ac && *ab > *pa && *ac > *pa) return t;
  }
}

}  // namespace favourlab::testing
