#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "favourlab/formula.hpp"
#include "favourlab/rational.hpp"

namespace favourlab {

/// One weighted atom assignment. `truth[i]` is the value of universe atom i.
struct Outcome {
  std::vector<bool> truth;
  Rational weight;
};

/// Finite probability space: weighted outcomes over an ordered atom
/// universe. Weights need not sum to one; probabilities are weight ratios.
/// Repeated assignments are allowed and simply add up.
class World {
 public:
  /// Throws InvalidInput on a non-positive weight, an assignment whose width
  /// differs from the universe, or an empty outcome list.
  World(Universe universe, std::vector<Outcome> outcomes, std::string name = {});

  const Universe& universe() const { return universe_; }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const Rational& total_weight() const { return total_; }
  const std::string& name() const { return name_; }

  /// Sum of the weights of outcomes satisfying `e`.
  Rational mass(const Formula& e) const;
  Rational probability(const Formula& e) const { return mass(e) / total_; }
  /// p(e | given), or nullopt when the condition has zero mass.
  std::optional<Rational> try_conditional(const Formula& e, const Formula& given) const;
  /// p(e | given). Throws ZeroMassCondition when p(given) = 0.
  Rational conditional(const Formula& e, const Formula& given) const;

 private:
  Universe universe_;
  std::vector<Outcome> outcomes_;
  Rational total_;
  std::string name_;
};

/// Accumulates outcomes by naming their true atoms.
class WorldBuilder {
 public:
  explicit WorldBuilder(const std::vector<std::string>& atoms, std::string name = {});

  WorldBuilder& add(const std::vector<std::string>& true_atoms, const Rational& weight = 1);
  /// Adds `count` unit-weight copies.
  WorldBuilder& repeat(const std::vector<std::string>& true_atoms, std::size_t count);

  World build() const { return World(universe_, outcomes_, name_); }

 private:
  Universe universe_;
  std::vector<Outcome> outcomes_;
  std::string name_;
};

/// Reads the line-oriented world format:
///
///     # comment
///     name: optional label
///     atoms: s c1 c2
///     1 : s, c1, c2
///     2/3 :
///
/// Each outcome line is a weight (integer or n/d) followed by the atoms true
/// in that outcome.
World parse_world(std::string_view source);

/// Writes `w` in the format read by parse_world; `comments` become leading
/// `#` lines.
std::string format_world(const World& w, const std::vector<std::string>& comments = {});

Rational probability(const World& w, const Formula& e);
Rational conditional(const World& w, const Formula& e, const Formula& given);

enum class Favour { favours, disfavours, neutral, undefined };

std::string_view to_string(Favour f);

/// Outcome of comparing p(hypothesis | evidence) against p(hypothesis).
struct FavourVerdict {
  Favour verdict = Favour::undefined;
  std::optional<Rational> conditional;  // p(h|e); absent iff undefined
  Rational prior;                       // p(h)
};

/// "evidence favours hypothesis": p(h|e) > p(h). Undefined when p(e) = 0.
FavourVerdict favours(const World& w, const Formula& hypothesis, const Formula& evidence);

/// Both sides of p(a|g) + p(b|g) = p(a&b|g) + p(a|b|g).
struct IdentityReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

IdentityReport check_disjunction_identity(const World& w, const Formula& a, const Formula& b,
                                          const Formula& given);

}  // namespace favourlab
