#include "favourlab/default_logic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "favourlab/error.hpp"

namespace favourlab {

DefaultRule DefaultRule::normal(Formula prerequisite, Formula consequent) {
  Formula justification = consequent;
  return DefaultRule{std::move(prerequisite), std::move(justification), std::move(consequent)};
}

std::string DefaultRule::to_string() const {
  return prerequisite.to_string() + " : " + justification.to_string() + " / " + consequent.to_string();
}

// ---------------------------------------------------------------------------
// Theory text format

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

class TheoryReader {
 public:
  explicit TheoryReader(const EngineLimits& limits) : limits_(limits) {}

  DefaultTheory read(std::string_view source) {
    std::istringstream in{std::string(source)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no_;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      std::size_t column = 0;
      line = trim(line, &column);
      if (line.empty()) continue;
      if (line.starts_with("atoms:")) {
        read_atoms(line.substr(6), column + 6);
      } else if (line.starts_with("fact:")) {
        theory_.facts.push_back(formula(line.substr(5), column + 5));
      } else if (line.starts_with("default:")) {
        read_default(line.substr(8), column + 8);
      } else {
        fail("expected 'atoms:', 'fact:' or 'default:'", column);
      }
    }
    if (!fixed_universe_) {
      std::set<std::string> atoms;
      for (const auto& f : theory_.facts) f.collect_atoms(atoms);
      for (const auto& r : theory_.rules) {
        r.prerequisite.collect_atoms(atoms);
        r.consequent.collect_atoms(atoms);
      }
      for (const auto& a : atoms) theory_.universe.add(a);
    }
    return std::move(theory_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw SyntaxError("line " + std::to_string(line_no_) + ": " + message, column);
  }

  void read_atoms(std::string_view text, std::size_t column) {
    if (fixed_universe_ || !theory_.facts.empty() || !theory_.rules.empty())
      fail("'atoms:' must appear once, before facts and defaults", column);
    fixed_universe_ = true;
    std::string word;
    std::istringstream words{std::string(text)};
    while (words >> word) {
      if (!is_valid_atom_name(word)) fail("invalid atom name '" + word + "'", column);
      if (theory_.universe.contains(word)) fail("duplicate atom '" + word + "'", column);
      theory_.universe.add(word);
    }
  }

  Formula formula(std::string_view text, std::size_t column) {
    std::size_t offset = column;
    text = trim(text, &offset);
    if (text.empty()) fail("expected a formula", offset);
    try {
      return fixed_universe_ ? parse_formula(text, theory_.universe) : parse_formula(text);
    } catch (const SyntaxError& e) {
      std::string what = e.what();
      fail(what.substr(0, what.rfind(" at position")), offset + e.position());
    } catch (const UnknownAtomError& e) {
      fail(std::string(e.what()), offset);
    }
  }

  void read_default(std::string_view text, std::size_t column) {
    auto colon = text.find(':');
    auto slash = text.find('/');
    if (colon == std::string_view::npos || slash == std::string_view::npos || slash < colon)
      fail("expected 'default: <prerequisite> : <justification> / <consequent>'", column);
    Formula pre = formula(text.substr(0, colon), column);
    Formula just = formula(text.substr(colon + 1, slash - colon - 1), column + colon + 1);
    Formula cons = formula(text.substr(slash + 1), column + slash + 1);
    if (!(just == cons))
      fail("non-normal default: justification '" + just.to_string() + "' differs from consequent '" +
               cons.to_string() + "'",
           column + colon + 1);
    if (theory_.rules.size() == limits_.max_rules)
      throw BoundExceeded("theory has more than " + std::to_string(limits_.max_rules) + " defaults");
    theory_.rules.push_back(DefaultRule{std::move(pre), std::move(just), std::move(cons)});
  }

  EngineLimits limits_;
  DefaultTheory theory_;
  bool fixed_universe_ = false;
  std::size_t line_no_ = 0;
};

}  // namespace

DefaultTheory parse_theory(std::string_view source, const EngineLimits& limits) {
  return TheoryReader(limits).read(source);
}

std::string format_theory(const DefaultTheory& t) {
  std::string out = "atoms:";
  for (const auto& a : t.universe.names()) out += " " + a;
  out += "\n";
  for (const auto& f : t.facts) out += "fact: " + f.to_string() + "\n";
  for (const auto& r : t.rules) out += "default: " + r.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Extensions

namespace {

using Models = boost::dynamic_bitset<>;

// Models of the facts, and for every formula of interest the subset of those
// models satisfying it. Entailment and consistency relative to any set of
// consequents then reduce to bitset operations.
class ModelTable {
 public:
  ModelTable(const DefaultTheory& t, const EngineLimits& limits) {
    if (t.rules.size() > limits.max_rules)
      throw BoundExceeded("theory has " + std::to_string(t.rules.size()) + " defaults; bound is " +
                          std::to_string(limits.max_rules));
    Universe u = t.universe;
    for (const auto& f : t.facts)
      for (const auto& a : f.atoms()) u.add(a);
    for (const auto& r : t.rules)
      for (const Formula* f : {&r.prerequisite, &r.justification, &r.consequent})
        for (const auto& a : f->atoms()) u.add(a);
    if (u.size() > limits.max_atoms)
      throw BoundExceeded("theory mentions " + std::to_string(u.size()) + " atoms; bound is " +
                          std::to_string(limits.max_atoms));

    std::vector<CompiledFormula> facts;
    for (const auto& f : t.facts) facts.emplace_back(f, u);
    const std::uint64_t count = std::uint64_t{1} << u.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      auto value = [mask](std::size_t i) { return ((mask >> i) & 1U) != 0; };
      if (std::all_of(facts.begin(), facts.end(), [&](const auto& f) { return f.evaluate(value); }))
        models_.push_back(mask);
    }
    for (const auto& r : t.rules) {
      prerequisite_.push_back(satisfying(r.prerequisite, u));
      justification_.push_back(satisfying(r.justification, u));
      consequent_.push_back(satisfying(r.consequent, u));
    }
  }

  bool facts_consistent() const { return !models_.empty(); }
  Models all() const { return Models(models_.size()).set(); }

  const Models& prerequisite(std::size_t r) const { return prerequisite_[r]; }
  const Models& justification(std::size_t r) const { return justification_[r]; }
  const Models& consequent(std::size_t r) const { return consequent_[r]; }

 private:
  Models satisfying(const Formula& f, const Universe& u) const {
    CompiledFormula compiled(f, u);
    Models out(models_.size());
    for (std::size_t i = 0; i < models_.size(); ++i) {
      const std::uint64_t mask = models_[i];
      out[i] = compiled.evaluate([mask](std::size_t a) { return ((mask >> a) & 1U) != 0; });
    }
    return out;
  }

  std::vector<std::uint64_t> models_;
  std::vector<Models> prerequisite_, justification_, consequent_;
};

// Firing order of `members` starting from the facts, always firing the
// lowest-index applicable rule; nullopt if some member never becomes
// applicable.
std::optional<std::vector<std::size_t>> ground(const ModelTable& table, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> order;
  std::vector<bool> fired(members.size(), false);
  Models current = table.all();
  while (order.size() < members.size()) {
    bool progressed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (fired[i] || !current.is_subset_of(table.prerequisite(members[i]))) continue;
      fired[i] = true;
      order.push_back(members[i]);
      current &= table.consequent(members[i]);
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return order;
}

}  // namespace

ExtensionSet compute_extensions(const DefaultTheory& t, const EngineLimits& limits) {
  ModelTable table(t, limits);
  ExtensionSet result;
  if (!table.facts_consistent()) {
    result.facts_inconsistent = true;
    return result;
  }

  const std::size_t m = t.rules.size();
  std::vector<std::pair<std::vector<std::size_t>, Extension>> found;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<std::size_t> members;
    Models closure = table.all();
    for (std::size_t r = 0; r < m; ++r)
      if ((subset >> r) & 1U) {
        members.push_back(r);
        closure &= table.consequent(r);
      }

    auto applicable = [&](std::size_t r) { return closure.intersects(table.justification(r)); };
    bool ok = std::all_of(members.begin(), members.end(), applicable);
    for (std::size_t r = 0; ok && r < m; ++r) {
      if ((subset >> r) & 1U) continue;
      if (closure.is_subset_of(table.prerequisite(r)) && applicable(r)) ok = false;
    }
    if (!ok) continue;
    auto order = ground(table, members);
    if (!order) continue;

    std::vector<Formula> base = t.facts;
    for (std::size_t r : *order) base.push_back(t.rules[r].consequent);
    found.emplace_back(members, Extension(*order, std::move(base), limits.max_atoms));
  }

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [members, ext] : found) result.extensions.push_back(std::move(ext));
  return result;
}

std::string check_extension(const DefaultTheory& t, const std::vector<std::size_t>& generating,
                            const EngineLimits& limits) {
  std::vector<bool> in(t.rules.size(), false);
  for (std::size_t r : generating) {
    if (r >= t.rules.size()) return "rule index " + std::to_string(r) + " out of range";
    if (in[r]) return "rule " + std::to_string(r) + " listed twice";
    in[r] = true;
  }

  std::vector<Formula> base = t.facts;
  for (std::size_t r : generating) {
    if (!entails(base, t.rules[r].prerequisite, limits.max_atoms))
      return "groundedness: prerequisite of rule " + std::to_string(r) + " not derivable when it fires";
    base.push_back(t.rules[r].consequent);
  }
  if (!consistent(base, limits.max_atoms)) return "extension base is inconsistent";

  auto justified = [&](std::size_t r) {
    std::vector<Formula> with = base;
    with.push_back(t.rules[r].justification);
    return consistent(with, limits.max_atoms);
  };
  for (std::size_t r : generating)
    if (!justified(r)) return "applicability: justification of rule " + std::to_string(r) + " is inconsistent";
  for (std::size_t r = 0; r < t.rules.size(); ++r) {
    if (in[r]) continue;
    if (entails(base, t.rules[r].prerequisite, limits.max_atoms) && justified(r))
      return "stability: rule " + std::to_string(r) + " applies but is not generating";
  }
  return {};
}

QueryMode parse_query_mode(std::string_view text) {
  if (text == "skeptical") return QueryMode::skeptical;
  if (text == "credulous") return QueryMode::credulous;
  throw InvalidInput("unknown query mode '" + std::string(text) + "'");
}

bool query(const DefaultTheory& t, const Formula& f, QueryMode mode, const EngineLimits& limits) {
  ExtensionSet set = compute_extensions(t, limits);
  if (set.facts_inconsistent) throw InvalidInput("theory facts are inconsistent");
  auto entailed = [&f](const Extension& e) { return e.entails(f); };
  return mode == QueryMode::skeptical
             ? std::all_of(set.extensions.begin(), set.extensions.end(), entailed)
             : std::any_of(set.extensions.begin(), set.extensions.end(), entailed);
}

DefaultTheory to_consequent_form(const DefaultTheory& t) {
  DefaultTheory out = t;
  for (DefaultRule& r : out.rules) {
    if (r.is_prerequisite_free()) continue;
    r = DefaultRule{Formula::constant(true), implies(r.prerequisite, r.justification),
                    implies(r.prerequisite, r.consequent)};
  }
  return out;
}

}  // namespace favourlab
