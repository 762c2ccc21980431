#include "favourlab/construction.hpp"

#include <algorithm>

#include "favourlab/error.hpp"

namespace favourlab {

World build_two_class_world(std::size_t extra_science) {
  WorldBuilder b({"s", "c1", "c2"}, "two-class");
  b.repeat({"s", "c1", "c2"}, 3);
  b.repeat({"c1"}, 2);
  b.repeat({"c2"}, 2);
  b.repeat({"s"}, extra_science);
  return b.build();
}

namespace {

void require_spec(const ConstructionSpec& spec) {
  if (!(Rational(0) < spec.v2 && spec.v2 < spec.v1 && spec.v1 < Rational(1)))
    throw InvalidInput("construction requires 0 < v2 < v1 < 1, got v1=" + spec.v1.to_string() +
                       " v2=" + spec.v2.to_string());
}

std::uint64_t to_count(const Integer& value) {
  if (value > Integer(kMaxClasses))
    throw BoundExceeded("construction needs " + value.str() + " students per class or classes; bound is " +
                        std::to_string(kMaxClasses));
  return std::max<std::uint64_t>(1, value.convert_to<std::uint64_t>());
}

}  // namespace

std::uint64_t minimal_science_per_class(const Rational& v1) {
  if (!(Rational(0) < v1 && v1 < Rational(1))) throw InvalidInput("v1 must lie in (0, 1)");
  return to_count((v1 / (Rational(1) - v1)).ceil());
}

std::uint64_t minimal_class_count(std::uint64_t k, const Rational& v2) {
  if (!(Rational(0) < v2 && v2 < Rational(1))) throw InvalidInput("v2 must lie in (0, 1)");
  return to_count((Rational(static_cast<std::int64_t>(k)) * (Rational(1) - v2) / v2).ceil());
}

DisjunctiveConstruction build_disjunctive_world(const ConstructionSpec& spec) {
  require_spec(spec);
  const std::uint64_t k = minimal_science_per_class(spec.v1);
  const std::uint64_t n = minimal_class_count(k, spec.v2);

  std::vector<std::string> atoms{"s"};
  for (std::uint64_t i = 1; i <= n; ++i) atoms.push_back("c" + std::to_string(i));
  Universe universe(atoms);

  std::vector<Outcome> outcomes;
  outcomes.reserve(k + n + spec.extra_science);
  outcomes.insert(outcomes.end(), k, Outcome{std::vector<bool>(atoms.size(), true), 1});
  for (std::uint64_t i = 1; i <= n; ++i) {
    Outcome arts{std::vector<bool>(atoms.size(), false), 1};
    arts.truth[i] = true;
    outcomes.push_back(std::move(arts));
  }
  Outcome outsider{std::vector<bool>(atoms.size(), false), 1};
  outsider.truth[0] = true;
  outcomes.insert(outcomes.end(), spec.extra_science, outsider);

  return {World(std::move(universe), std::move(outcomes), "disjunctive"), k, n};
}

World build_conjunctive_world(const Rational& v1, const Rational& v2) {
  const Rational zero(0), one(1);
  if (!(zero < v1 && v1 < one && zero < v2 && v2 < one))
    throw InvalidInput("conjunctive construction requires v1, v2 in (0, 1)");

  // Region a&b has weight 1 and c-fraction v2. Regions a&!b and !a&b have
  // weight M and c-fraction x = v1 + (v1 - v2)/M, which keeps p(c|a) = p(c|b)
  // = v1; M is the least integer keeping x inside [0, 1].
  Rational bound = std::max({one, (v1 - v2) / (one - v1), (v2 - v1) / v1});
  const Rational m(bound.ceil(), Integer(1));
  const Rational x = v1 + (v1 - v2) / m;

  WorldBuilder b({"a", "b", "c"}, "conjunctive");
  auto split = [&b](std::vector<std::string> atoms, const Rational& weight, const Rational& fraction) {
    const Rational with_c = weight * fraction;
    const Rational without_c = weight - with_c;
    if (without_c.sign() > 0) b.add(atoms, without_c);
    atoms.push_back("c");
    if (with_c.sign() > 0) b.add(atoms, with_c);
  };
  split({"a", "b"}, one, v2);
  split({"a"}, m, x);
  split({"b"}, m, x);
  b.add({}, one);
  return b.build();
}

std::vector<std::string> describe(const DisjunctiveConstruction& c, const ConstructionSpec& spec) {
  return {
      "disjunctive construction",
      "v1 = " + spec.v1.to_string() + ", v2 = " + spec.v2.to_string() +
          ", extra_science = " + std::to_string(spec.extra_science),
      "k = " + std::to_string(c.k) + ", n = " + std::to_string(c.n),
  };
}

}  // namespace favourlab
