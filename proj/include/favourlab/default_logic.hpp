#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "favourlab/formula.hpp"
#include "favourlab/logic.hpp"

namespace favourlab {

/// Normal default  prerequisite : M justification / consequent, with the
/// justification equal to the consequent.
struct DefaultRule {
  Formula prerequisite;
  Formula justification;
  Formula consequent;

  /// Throws InvalidInput when the justification differs from the consequent.
  static DefaultRule normal(Formula prerequisite, Formula consequent);

  bool is_prerequisite_free() const { return prerequisite.is_constant(true); }
  /// "prerequisite : justification / consequent"
  std::string to_string() const;

  friend bool operator==(const DefaultRule&, const DefaultRule&) = default;
};

inline constexpr std::size_t kDefaultRuleBound = 16;

struct EngineLimits {
  std::size_t max_rules = kDefaultRuleBound;
  std::size_t max_atoms = kDefaultAtomBound;
};

struct DefaultTheory {
  Universe universe;
  std::vector<Formula> facts;
  std::vector<DefaultRule> rules;
};

/// Reads the line-oriented theory format:
///
///     atoms: bird fly emu
///     fact: emu -> bird
///     default: bird : fly / fly
///
/// Without an `atoms:` line the universe is every atom mentioned.
DefaultTheory parse_theory(std::string_view source, const EngineLimits& limits = {});
std::string format_theory(const DefaultTheory& t);

/// One Reiter extension, described by its generating defaults. The
/// extension itself is the deductive closure of `base`.
class Extension {
 public:
  Extension(std::vector<std::size_t> generating, std::vector<Formula> base, std::size_t atom_bound)
      : generating_(std::move(generating)), base_(std::move(base)), atom_bound_(atom_bound) {}

  /// Rule indices in a firing order: each prerequisite follows from the
  /// facts plus the consequents of the rules before it.
  const std::vector<std::size_t>& generating() const { return generating_; }
  /// Facts followed by the generating consequents in firing order.
  const std::vector<Formula>& base() const { return base_; }

  bool entails(const Formula& f) const { return favourlab::entails(base_, f, atom_bound_); }

 private:
  std::vector<std::size_t> generating_;
  std::vector<Formula> base_;
  std::size_t atom_bound_;
};

struct ExtensionSet {
  /// Inconsistent facts: the only extension is the set of all formulas,
  /// reported here instead of in `extensions`.
  bool facts_inconsistent = false;
  /// Ordered by the sorted generating index set.
  std::vector<Extension> extensions;
};

/// Every Reiter extension of a normal theory, by enumerating candidate
/// generating sets. Throws BoundExceeded past the rule or atom limits.
ExtensionSet compute_extensions(const DefaultTheory& t, const EngineLimits& limits = {});

/// Re-checks groundedness, applicability and stability of a claimed
/// generating set directly with entails/consistent. Returns an empty string
/// when they hold, else the first failed condition.
std::string check_extension(const DefaultTheory& t, const std::vector<std::size_t>& generating,
                            const EngineLimits& limits = {});

enum class QueryMode { skeptical, credulous };
QueryMode parse_query_mode(std::string_view text);

/// Skeptical: entailed by every extension. Credulous: by at least one.
/// Throws InvalidInput when the facts are inconsistent.
bool query(const DefaultTheory& t, const Formula& f, QueryMode mode, const EngineLimits& limits = {});

/// Rewrites each  a : b / b  with a != true as  true : (a -> b) / (a -> b).
DefaultTheory to_consequent_form(const DefaultTheory& t);

}  // namespace favourlab
