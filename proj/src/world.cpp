#include "favourlab/world.hpp"

#include <cctype>
#include <sstream>

#include "favourlab/error.hpp"

namespace favourlab {

World::World(Universe universe, std::vector<Outcome> outcomes, std::string name)
    : universe_(std::move(universe)), outcomes_(std::move(outcomes)), name_(std::move(name)) {
  if (outcomes_.empty()) throw InvalidInput("world has no outcomes (zero total weight)");
  for (const Outcome& o : outcomes_) {
    if (o.weight.sign() <= 0) throw InvalidInput("non-positive outcome weight " + o.weight.to_string());
    if (o.truth.size() != universe_.size())
      throw InvalidInput("outcome assignment does not cover the universe");
    total_ += o.weight;
  }
}

Rational World::mass(const Formula& e) const {
  CompiledFormula compiled(e, universe_);
  Rational sum;
  for (const Outcome& o : outcomes_) {
    const auto& truth = o.truth;
    if (compiled.evaluate([&truth](std::size_t i) { return static_cast<bool>(truth[i]); }))
      sum += o.weight;
  }
  return sum;
}

std::optional<Rational> World::try_conditional(const Formula& e, const Formula& given) const {
  Rational denominator = mass(given);
  if (denominator.is_zero()) return std::nullopt;
  return mass(e && given) / denominator;
}

Rational World::conditional(const Formula& e, const Formula& given) const {
  auto value = try_conditional(e, given);
  if (!value) throw ZeroMassCondition(given.to_string());
  return *value;
}

WorldBuilder::WorldBuilder(const std::vector<std::string>& atoms, std::string name)
    : universe_(atoms), name_(std::move(name)) {}

WorldBuilder& WorldBuilder::add(const std::vector<std::string>& true_atoms, const Rational& weight) {
  Outcome o{std::vector<bool>(universe_.size(), false), weight};
  for (const auto& a : true_atoms) {
    std::size_t i = universe_.find(a);
    if (i == Universe::npos) throw UnknownAtomError(a);
    o.truth[i] = true;
  }
  outcomes_.push_back(std::move(o));
  return *this;
}

WorldBuilder& WorldBuilder::repeat(const std::vector<std::string>& true_atoms, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) add(true_atoms);
  return *this;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on whitespace and commas.
std::vector<std::string> split_atoms(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message, std::size_t column) {
  throw SyntaxError("line " + std::to_string(line) + ": " + message, column);
}

}  // namespace

World parse_world(std::string_view source) {
  std::optional<Universe> universe;
  std::vector<Outcome> outcomes;
  std::string name;
  std::istringstream in{std::string(source)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("name:")) {
      name = std::string(trim(line.substr(5)));
      continue;
    }
    if (line.starts_with("atoms:")) {
      if (universe) fail(line_no, "duplicate atoms header", 0);
      universe.emplace();
      for (const auto& a : split_atoms(line.substr(6))) {
        if (!is_valid_atom_name(a)) fail(line_no, "invalid atom name '" + a + "'", 6);
        if (universe->contains(a)) fail(line_no, "duplicate atom '" + a + "'", 6);
        universe->add(a);
      }
      continue;
    }
    if (!universe) fail(line_no, "expected 'atoms:' header before outcomes", 0);

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected '<weight> : <atoms>'", line.size());
    Rational weight;
    try {
      weight = Rational::parse(line.substr(0, colon));
    } catch (const SyntaxError& e) {
      fail(line_no, "bad weight: " + std::string(e.what()), e.position());
    }
    if (weight.sign() <= 0) fail(line_no, "non-positive weight " + weight.to_string(), 0);
    Outcome o{std::vector<bool>(universe->size(), false), weight};
    for (const auto& a : split_atoms(line.substr(colon + 1))) {
      std::size_t i = universe->find(a);
      if (i == Universe::npos) fail(line_no, "atom '" + a + "' not declared", colon + 1);
      o.truth[i] = true;
    }
    outcomes.push_back(std::move(o));
  }
  if (!universe) throw SyntaxError("missing 'atoms:' header", 0);
  if (outcomes.empty()) throw InvalidInput("world has zero total weight");
  return World(std::move(*universe), std::move(outcomes), std::move(name));
}

std::string format_world(const World& w, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  if (!w.name().empty()) out += "name: " + w.name() + "\n";
  out += "atoms:";
  for (const auto& a : w.universe().names()) out += " " + a;
  out += "\n";
  for (const Outcome& o : w.outcomes()) {
    out += o.weight.to_string() + " :";
    bool first = true;
    for (std::size_t i = 0; i < o.truth.size(); ++i) {
      if (!o.truth[i]) continue;
      out += first ? " " : ", ";
      out += w.universe()[i];
      first = false;
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Queries

Rational probability(const World& w, const Formula& e) { return w.probability(e); }

Rational conditional(const World& w, const Formula& e, const Formula& given) {
  return w.conditional(e, given);
}

std::string_view to_string(Favour f) {
  switch (f) {
    case Favour::favours: return "favours";
    case Favour::disfavours: return "disfavours";
    case Favour::neutral: return "neutral";
    case Favour::undefined: return "undefined";
  }
  return "undefined";
}

FavourVerdict favours(const World& w, const Formula& hypothesis, const Formula& evidence) {
  FavourVerdict v;
  v.prior = w.probability(hypothesis);
  v.conditional = w.try_conditional(hypothesis, evidence);
  if (!v.conditional) return v;
  if (*v.conditional > v.prior) v.verdict = Favour::favours;
  else if (*v.conditional < v.prior) v.verdict = Favour::disfavours;
  else v.verdict = Favour::neutral;
  return v;
}

IdentityReport check_disjunction_identity(const World& w, const Formula& a, const Formula& b,
                                          const Formula& given) {
  Rational g = w.mass(given);
  if (g.is_zero()) throw ZeroMassCondition(given.to_string());
  auto cond = [&](const Formula& e) { return w.mass(e && given) / g; };
  IdentityReport r;
  r.lhs = cond(a) + cond(b);
  r.rhs = cond(a && b) + cond(a || b);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace favourlab
