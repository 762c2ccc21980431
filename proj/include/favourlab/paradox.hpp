#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "favourlab/formula.hpp"
#include "favourlab/rational.hpp"
#include "favourlab/world.hpp"

namespace favourlab {

/// One inequality between two conditionals. `holds` is false whenever either
/// side is undefined.
struct Comparison {
  std::optional<Rational> left;
  std::optional<Rational> right;
  bool holds = false;

  bool defined() const { return left && right; }
};

/// The three Simpson inequalities:
///   p(a|b&c) > p(a|c),  p(a|b&!c) > p(a|!c),  p(a|b) < p(a).
struct SimpsonReport {
  Comparison within_c;
  Comparison within_not_c;
  Comparison marginal;
  bool paradox = false;
};

SimpsonReport simpson_check(const World& w, const Formula& a, const Formula& b, const Formula& c);

enum class SearchPattern { simpson, chung_conjunctive, chung_disjunctive };

std::string_view to_string(SearchPattern p);
/// Accepts "simpson", "chung-conjunctive"/"chung-conj", "chung-disjunctive"/"chung-disj".
SearchPattern parse_search_pattern(std::string_view text);

/// Chung's configurations: b and c each favour a while b&c (conjunctive) or
/// b|c (disjunctive) disfavours it.
struct ChungReport {
  bool applicable = false;  // priors of a, b, c and the combined event positive
  bool holds = false;
  Rational prior;           // p(a)
  std::optional<Rational> given_b;
  std::optional<Rational> given_c;
  std::optional<Rational> given_combined;
};

/// Throws InvalidInput when `variant` is SearchPattern::simpson.
ChungReport chung_check(const World& w, const Formula& a, const Formula& b, const Formula& c,
                        SearchPattern variant);

enum class Proposition1Verdict { confirmed, precondition_failed, violated };
std::string_view to_string(Proposition1Verdict v);

/// Exclusive a, b each favoured by c (p(x|c) > p(x)) must leave a|b favoured by c.
/// `violated` would mean an arithmetic defect.
struct Proposition1Report {
  Proposition1Verdict verdict = Proposition1Verdict::precondition_failed;
  Rational overlap;                      // p(a&b)
  std::optional<FavourVerdict> a_given_c;
  std::optional<FavourVerdict> b_given_c;
  std::optional<FavourVerdict> disjunction_given_c;
};

Proposition1Report proposition1_check(const World& w, const Formula& a, const Formula& b,
                                      const Formula& c);

enum class Proposition2Verdict {
  not_applicable,
  satisfied_via_conjunction,
  satisfied_via_disjunction,
  satisfied_via_both,
  violated,
};
std::string_view to_string(Proposition2Verdict v);

/// If b and c each favour a, then b&c or b|c favours a.
struct Proposition2Report {
  Proposition2Verdict verdict = Proposition2Verdict::not_applicable;
  FavourVerdict given_b;
  FavourVerdict given_c;
  FavourVerdict given_conjunction;  // undefined when p(b&c) = 0
  FavourVerdict given_disjunction;
};

Proposition2Report proposition2_audit(const World& w, const Formula& a, const Formula& b,
                                      const Formula& c);

/// p(mid) lies between p(lo) and p(hi), where the stratum's mass splits into
/// the two refined cells.
struct Betweenness {
  std::string stratum;
  std::string refiner;
  bool defined = false;  // both refined cells have positive mass
  bool weak = false;     // min <= middle <= max
  bool strict = false;   // min < middle < max
};

/// Conditionals of a on the nine antecedents built from b and c, plus the
/// three ordering constraints those conditionals must obey.
struct NineAntecedentProfile {
  static constexpr std::array<std::string_view, 9> kLabels{
      "true", "b", "!b", "c", "!c", "b & c", "b & !c", "!b & c", "!b & !c"};

  std::array<std::optional<Rational>, 9> conditionals;
  std::array<Betweenness, 4> betweenness;

  /// Every defined betweenness holds weakly.
  bool constraint1 = true;
  /// p(a|g) + p(b|g) = p(a&b|g) + p(a|b|g) for every positive-mass antecedent g.
  bool constraint2 = true;
  /// Premise: p(a|b) != p(a) and p(a|c) != p(a), both defined.
  bool constraint3_premise = false;
  /// Among positive-mass cells some conditional exceeds p(a) and some falls
  /// below it. Vacuously true without the premise.
  bool constraint3 = true;
};

NineAntecedentProfile nine_antecedent_profile(const World& w, const Formula& a, const Formula& b,
                                              const Formula& c);

enum class PrincipleVerdict { holds, counterexample, not_applicable };
std::string_view to_string(PrincipleVerdict v);

/// Proof by cases under favouring: a favours c and b favours c, so does a|b?
struct PrincipleReport {
  PrincipleVerdict verdict = PrincipleVerdict::not_applicable;
  FavourVerdict given_a;
  FavourVerdict given_b;
  FavourVerdict given_disjunction;
};

PrincipleReport check_disjunction_principle(const World& w, const Formula& a, const Formula& b,
                                            const Formula& c);

/// Eight counts over the truth combinations of three atoms. Index order is
/// TTT TTF TFT TFF FTT FTF FFT FFF over (a, b, c), so c varies fastest.
struct CellTable {
  std::array<std::uint32_t, 8> counts{};
  std::array<std::string, 3> atoms{"a", "b", "c"};

  static constexpr std::size_t index(bool a, bool b, bool c) {
    return (a ? 0U : 4U) + (b ? 0U : 2U) + (c ? 0U : 1U);
  }
  std::uint32_t at(bool a, bool b, bool c) const { return counts[index(a, b, c)]; }
  std::uint64_t total() const;

  /// World with one unit-weight outcome per counted individual. Throws
  /// InvalidInput for the all-zero table.
  World to_world() const;

  /// "cells a b c : n1 ... n8"
  std::string to_string() const;
  static CellTable parse(std::string_view text);

  friend bool operator==(const CellTable&, const CellTable&) = default;
};

/// Integer-only test of `pattern` on the table's own atoms. Independent of
/// the World-based checkers.
bool matches_pattern(const CellTable& t, SearchPattern pattern);

/// Runs the World-based checker for `pattern` on the table's atoms.
bool check_pattern(const World& w, const Formula& a, const Formula& b, const Formula& c,
                   SearchPattern pattern);

/// Enumerates every table with counts in 0..max_cell in lexicographic order
/// of the count tuple and returns the first `limit` that exhibit `pattern`.
/// Each hit is confirmed by check_pattern before it is returned. `workers`
/// = 0 uses the hardware concurrency; the result does not depend on it.
std::vector<CellTable> search_counterexamples(SearchPattern pattern, std::uint32_t max_cell,
                                              std::size_t limit, unsigned workers = 0);

/// Calls `visit` for every table with counts in 0..max_cell except the
/// all-zero one, in lexicographic order.
template <class Visit>
void for_each_table(std::uint32_t max_cell, Visit&& visit) {
  CellTable t;
  for (;;) {
    if (t.total() > 0) visit(static_cast<const CellTable&>(t));
    std::size_t i = 8;
    while (i > 0 && t.counts[i - 1] == max_cell) t.counts[--i] = 0;
    if (i == 0) return;
    ++t.counts[i - 1];
  }
}

}  // namespace favourlab
