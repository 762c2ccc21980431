#include "favourlab/paradox.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <thread>

#include "favourlab/error.hpp"

namespace favourlab {

namespace {

enum class Direction { greater, less };

Comparison compare(std::optional<Rational> left, std::optional<Rational> right, Direction d) {
  Comparison c{std::move(left), std::move(right), false};
  if (c.defined()) c.holds = d == Direction::greater ? *c.left > *c.right : *c.left < *c.right;
  return c;
}

bool raises(const FavourVerdict& v) { return v.verdict == Favour::favours; }

}  // namespace

// ---------------------------------------------------------------------------
// Simpson and Chung

SimpsonReport simpson_check(const World& w, const Formula& a, const Formula& b, const Formula& c) {
  SimpsonReport r;
  r.within_c = compare(w.try_conditional(a, b && c), w.try_conditional(a, c), Direction::greater);
  r.within_not_c = compare(w.try_conditional(a, b && !c), w.try_conditional(a, !c), Direction::greater);
  r.marginal = compare(w.try_conditional(a, b), w.probability(a), Direction::less);
  r.paradox = r.within_c.holds && r.within_not_c.holds && r.marginal.holds;
  return r;
}

std::string_view to_string(SearchPattern p) {
  switch (p) {
    case SearchPattern::simpson: return "simpson";
    case SearchPattern::chung_conjunctive: return "chung-conjunctive";
    case SearchPattern::chung_disjunctive: return "chung-disjunctive";
  }
  return "simpson";
}

SearchPattern parse_search_pattern(std::string_view text) {
  if (text == "simpson") return SearchPattern::simpson;
  if (text == "chung-conjunctive" || text == "chung-conj") return SearchPattern::chung_conjunctive;
  if (text == "chung-disjunctive" || text == "chung-disj") return SearchPattern::chung_disjunctive;
  throw InvalidInput("unknown search pattern '" + std::string(text) + "'");
}

ChungReport chung_check(const World& w, const Formula& a, const Formula& b, const Formula& c,
                        SearchPattern variant) {
  if (variant == SearchPattern::simpson) throw InvalidInput("chung_check needs a chung variant");
  const Formula combined = variant == SearchPattern::chung_conjunctive ? (b && c) : (b || c);
  ChungReport r;
  r.prior = w.probability(a);
  r.given_b = w.try_conditional(a, b);
  r.given_c = w.try_conditional(a, c);
  r.given_combined = w.try_conditional(a, combined);
  r.applicable = r.prior.sign() > 0 && r.given_b && r.given_c && r.given_combined;
  r.holds = r.applicable && *r.given_b > r.prior && *r.given_c > r.prior && *r.given_combined < r.prior;
  return r;
}

// ---------------------------------------------------------------------------
// Propositions

std::string_view to_string(Proposition1Verdict v) {
  switch (v) {
    case Proposition1Verdict::confirmed: return "confirmed";
    case Proposition1Verdict::precondition_failed: return "precondition-failed";
    case Proposition1Verdict::violated: return "violated";
  }
  return "violated";
}

Proposition1Report proposition1_check(const World& w, const Formula& a, const Formula& b,
                                      const Formula& c) {
  Proposition1Report r;
  r.overlap = w.probability(a && b);
  if (!r.overlap.is_zero() || w.mass(c).is_zero()) return r;
  r.a_given_c = favours(w, a, c);
  r.b_given_c = favours(w, b, c);
  if (!raises(*r.a_given_c) || !raises(*r.b_given_c)) return r;
  r.disjunction_given_c = favours(w, a || b, c);
  r.verdict = raises(*r.disjunction_given_c) ? Proposition1Verdict::confirmed : Proposition1Verdict::violated;
  return r;
}

std::string_view to_string(Proposition2Verdict v) {
  switch (v) {
    case Proposition2Verdict::not_applicable: return "not-applicable";
    case Proposition2Verdict::satisfied_via_conjunction: return "satisfied-via-conjunction";
    case Proposition2Verdict::satisfied_via_disjunction: return "satisfied-via-disjunction";
    case Proposition2Verdict::satisfied_via_both: return "satisfied-via-both";
    case Proposition2Verdict::violated: return "violated";
  }
  return "violated";
}

Proposition2Report proposition2_audit(const World& w, const Formula& a, const Formula& b,
                                      const Formula& c) {
  Proposition2Report r;
  r.given_b = favours(w, a, b);
  r.given_c = favours(w, a, c);
  r.given_conjunction = favours(w, a, b && c);
  r.given_disjunction = favours(w, a, b || c);
  if (!raises(r.given_b) || !raises(r.given_c)) return r;
  const bool conj = raises(r.given_conjunction);
  const bool disj = raises(r.given_disjunction);
  if (conj && disj) r.verdict = Proposition2Verdict::satisfied_via_both;
  else if (conj) r.verdict = Proposition2Verdict::satisfied_via_conjunction;
  else if (disj) r.verdict = Proposition2Verdict::satisfied_via_disjunction;
  else r.verdict = Proposition2Verdict::violated;
  return r;
}

// ---------------------------------------------------------------------------
// Nine antecedents

NineAntecedentProfile nine_antecedent_profile(const World& w, const Formula& a, const Formula& b,
                                              const Formula& c) {
  const std::array<Formula, 9> antecedents{
      Formula::constant(true), b, !b, c, !c, b && c, b && !c, !b && c, !b && !c};
  enum { kTrue, kB, kNotB, kC, kNotC, kBC, kBNotC, kNotBC, kNotBNotC };

  NineAntecedentProfile p;
  std::array<Rational, 9> masses;
  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    masses[i] = w.mass(antecedents[i]);
    if (!masses[i].is_zero()) p.conditionals[i] = w.mass(a && antecedents[i]) / masses[i];
  }

  struct Split {
    std::string_view stratum, refiner;
    int middle, lo, hi;
  };
  const std::array<Split, 4> splits{{
      {"c", "b", kC, kBC, kNotBC},
      {"!c", "b", kNotC, kBNotC, kNotBNotC},
      {"b", "c", kB, kBC, kBNotC},
      {"!b", "c", kNotB, kNotBC, kNotBNotC},
  }};
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const Split& s = splits[i];
    Betweenness& out = p.betweenness[i];
    out.stratum = s.stratum;
    out.refiner = s.refiner;
    const auto& x = p.conditionals[s.lo];
    const auto& y = p.conditionals[s.hi];
    const auto& m = p.conditionals[s.middle];
    out.defined = x && y && m;
    if (!out.defined) continue;
    const Rational& lo = std::min(*x, *y);
    const Rational& hi = std::max(*x, *y);
    out.weak = lo <= *m && *m <= hi;
    out.strict = lo < *m && *m < hi;
    p.constraint1 = p.constraint1 && out.weak;
  }

  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    if (masses[i].is_zero()) continue;
    p.constraint2 = p.constraint2 && check_disjunction_identity(w, a, b, antecedents[i]).equal;
  }

  const auto& prior = p.conditionals[kTrue];
  p.constraint3_premise = prior && p.conditionals[kB] && p.conditionals[kC] &&
                          *p.conditionals[kB] != *prior && *p.conditionals[kC] != *prior;
  if (p.constraint3_premise) {
    bool above = false, below = false;
    for (int cell : {kBC, kBNotC, kNotBC, kNotBNotC}) {
      if (!p.conditionals[cell]) continue;
      above = above || *p.conditionals[cell] > *prior;
      below = below || *p.conditionals[cell] < *prior;
    }
    p.constraint3 = above && below;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Disjunction principle

std::string_view to_string(PrincipleVerdict v) {
  switch (v) {
    case PrincipleVerdict::holds: return "holds";
    case PrincipleVerdict::counterexample: return "counterexample";
    case PrincipleVerdict::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

PrincipleReport check_disjunction_principle(const World& w, const Formula& a, const Formula& b,
                                            const Formula& c) {
  PrincipleReport r;
  r.given_a = favours(w, c, a);
  r.given_b = favours(w, c, b);
  r.given_disjunction = favours(w, c, a || b);
  if (!raises(r.given_a) || !raises(r.given_b)) return r;
  r.verdict = raises(r.given_disjunction) ? PrincipleVerdict::holds : PrincipleVerdict::counterexample;
  return r;
}

// ---------------------------------------------------------------------------
// Cell tables

std::uint64_t CellTable::total() const {
  std::uint64_t sum = 0;
  for (auto n : counts) sum += n;
  return sum;
}

World CellTable::to_world() const {
  if (total() == 0) throw InvalidInput("all-zero cell table has no world");
  WorldBuilder builder({atoms[0], atoms[1], atoms[2]});
  for (int ai = 1; ai >= 0; --ai)
    for (int bi = 1; bi >= 0; --bi)
      for (int ci = 1; ci >= 0; --ci) {
        std::vector<std::string> on;
        if (ai) on.push_back(atoms[0]);
        if (bi) on.push_back(atoms[1]);
        if (ci) on.push_back(atoms[2]);
        builder.repeat(on, at(ai, bi, ci));
      }
  return builder.build();
}

std::string CellTable::to_string() const {
  std::string out = "cells " + atoms[0] + " " + atoms[1] + " " + atoms[2] + " :";
  for (auto n : counts) out += " " + std::to_string(n);
  return out;
}

CellTable CellTable::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto word = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ':') ++pos;
    return std::string(text.substr(start, pos - start));
  };
  CellTable t;
  if (word() != "cells") throw SyntaxError("cell table must start with 'cells'", 0);
  for (auto& atom : t.atoms) {
    std::size_t at = pos;
    atom = word();
    if (!is_valid_atom_name(atom)) throw SyntaxError("expected atom name", at);
  }
  if (t.atoms[0] == t.atoms[1] || t.atoms[0] == t.atoms[2] || t.atoms[1] == t.atoms[2])
    throw SyntaxError("cell table atoms must be distinct", 0);
  skip();
  if (pos >= text.size() || text[pos] != ':') throw SyntaxError("expected ':'", pos);
  ++pos;
  for (auto& n : t.counts) {
    skip();
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > UINT32_MAX) throw SyntaxError("cell count too large", start);
      ++pos;
    }
    if (pos == start) throw SyntaxError("expected eight non-negative counts", pos);
    n = static_cast<std::uint32_t>(value);
  }
  skip();
  if (pos != text.size()) throw SyntaxError("trailing text after eight counts", pos);
  return t;
}

// ---------------------------------------------------------------------------
// Search

namespace {

// Marginal counts of a table, each paired with the a-count inside it.
struct Tally {
  std::uint64_t with_a = 0, all = 0;
};

Tally tally(const CellTable& t, int b, int c) {  // b, c: 1 true, 0 false, -1 either
  Tally out;
  for (int bi = 0; bi < 2; ++bi)
    for (int ci = 0; ci < 2; ++ci) {
      if ((b >= 0 && bi != b) || (c >= 0 && ci != c)) continue;
      std::uint64_t yes = t.at(true, bi, ci), no = t.at(false, bi, ci);
      out.with_a += yes;
      out.all += yes + no;
    }
  return out;
}

// x.with_a / x.all > y.with_a / y.all for positive denominators.
bool above(const Tally& x, const Tally& y) { return x.with_a * y.all > y.with_a * x.all; }

Tally union_of(const CellTable& t) {
  Tally all = tally(t, -1, -1), neither = tally(t, 0, 0);
  return {all.with_a - neither.with_a, all.all - neither.all};
}

}  // namespace

bool matches_pattern(const CellTable& t, SearchPattern pattern) {
  const Tally all = tally(t, -1, -1);
  if (all.all == 0) return false;
  const Tally b = tally(t, 1, -1), c = tally(t, -1, 1);
  if (pattern == SearchPattern::simpson) {
    const Tally bc = tally(t, 1, 1), not_c = tally(t, -1, 0), b_not_c = tally(t, 1, 0);
    if (c.all == 0 || not_c.all == 0 || bc.all == 0 || b_not_c.all == 0) return false;
    return above(bc, c) && above(b_not_c, not_c) && above(all, b);
  }
  if (all.with_a == 0 || b.all == 0 || c.all == 0) return false;
  const Tally combined = pattern == SearchPattern::chung_conjunctive ? tally(t, 1, 1) : union_of(t);
  if (combined.all == 0) return false;
  return above(b, all) && above(c, all) && above(all, combined);
}

bool check_pattern(const World& w, const Formula& a, const Formula& b, const Formula& c,
                   SearchPattern pattern) {
  if (pattern == SearchPattern::simpson) return simpson_check(w, a, b, c).paradox;
  return chung_check(w, a, b, c, pattern).holds;
}

std::vector<CellTable> search_counterexamples(SearchPattern pattern, std::uint32_t max_cell,
                                              std::size_t limit, unsigned workers) {
  if (limit == 0) return {};
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  const std::uint32_t slices = max_cell + 1;
  workers = std::min<unsigned>(workers, slices);

  // Slice s holds the tables whose first count is s; slices are scanned
  // independently and concatenated in order.
  std::vector<std::vector<CellTable>> found(slices);
  auto scan = [&](unsigned worker) {
    for (std::uint32_t s = worker; s < slices; s += workers) {
      CellTable t;
      t.counts[0] = s;
      auto& hits = found[s];
      for (;;) {
        if (hits.size() < limit && matches_pattern(t, pattern)) hits.push_back(t);
        if (hits.size() >= limit) break;
        std::size_t i = 8;
        while (i > 1 && t.counts[i - 1] == max_cell) t.counts[--i] = 0;
        if (i == 1) break;
        ++t.counts[i - 1];
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }

  std::vector<CellTable> out;
  for (auto& slice : found)
    for (auto& t : slice) {
      if (out.size() == limit) break;
      out.push_back(std::move(t));
    }

  const Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  for (const CellTable& t : out)
    if (!check_pattern(t.to_world(), a, b, c, pattern))
      throw std::logic_error("search hit " + t.to_string() + " rejected by " +
                             std::string(to_string(pattern)) + " checker");
  return out;
}

}  // namespace favourlab
