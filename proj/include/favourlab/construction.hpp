#pragma once

#include <cstdint>
#include <string>

#include "favourlab/rational.hpp"
#include "favourlab/world.hpp"

namespace favourlab {

/// Two core classes c1, c2 sharing three science students, each with two
/// arts students of its own, plus `extra_science` science students enrolled
/// in neither. Universe {s, c1, c2}; arts students are the outcomes with !s.
World build_two_class_world(std::size_t extra_science = 1);

/// Targets for the many-class construction: every class should give
/// p(s | c_i) >= v1 while the union of classes gives p(s | c1 | ... | cn) <= v2.
struct ConstructionSpec {
  Rational v1;
  Rational v2;
  std::size_t extra_science = 0;
};

struct DisjunctiveConstruction {
  World world;
  std::uint64_t k;  // science students in every class
  std::uint64_t n;  // number of classes
};

/// Largest class count build_disjunctive_world will materialise.
inline constexpr std::uint64_t kMaxClasses = 200000;

/// Minimal k >= v1/(1-v1) and n >= k(1-v2)/v2. Throws InvalidInput unless
/// 0 < v2 < v1 < 1.
std::uint64_t minimal_science_per_class(const Rational& v1);
std::uint64_t minimal_class_count(std::uint64_t k, const Rational& v2);

/// k science students attend all n classes; each class has one arts student
/// of its own; `extra_science` science students attend none. Atoms are
/// s, c1, ..., cn. Then p(s | ci) = k/(k+1) >= v1 and p(s | any ci) = k/(k+n) <= v2.
/// Throws BoundExceeded when n > kMaxClasses.
DisjunctiveConstruction build_disjunctive_world(const ConstructionSpec& spec);

/// World over {a, b, c} with p(c|a) = p(c|b) = v1 and p(c|a&b) = v2.
/// Throws InvalidInput unless both targets lie in the open unit interval.
World build_conjunctive_world(const Rational& v1, const Rational& v2);

/// Header comments recording the parameters of a construction, for
/// format_world.
std::vector<std::string> describe(const DisjunctiveConstruction& c, const ConstructionSpec& spec);

}  // namespace favourlab
