#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace favourlab {

enum class Connective { True, False, Atom, Not, And, Or, Implies, Iff };

/// True when `name` is a legal atom identifier: non-empty, made of lowercase
/// letters, digits and underscores, and not one of the keywords true/false.
bool is_valid_atom_name(std::string_view name);

/// Immutable propositional formula. Copies share structure. Conjunction and
/// disjunction are n-ary (at least two operands); a parenthesised operand of
/// the same connective stays a separate node, so printing round-trips.
class Formula {
 public:
  /// The constant true.
  Formula();

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula biconditional(Formula left, Formula right);

  /// Conjunction of any number of operands: true for none, the operand itself for one.
  static Formula all_of(std::vector<Formula> operands);
  /// Disjunction of any number of operands: false for none, the operand itself for one.
  static Formula any_of(std::vector<Formula> operands);

  Connective connective() const { return node_->connective; }
  bool is_constant(bool value) const {
    return connective() == (value ? Connective::True : Connective::False);
  }
  /// Atom name; empty for non-atoms.
  const std::string& name() const { return node_->name; }
  std::span<const Formula> operands() const { return node_->operands; }

  /// Structural equality.
  friend bool operator==(const Formula& x, const Formula& y);

  /// Canonical text in the parser's grammar with minimal parentheses.
  std::string to_string() const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

 private:
  struct Node {
    Connective connective;
    std::string name;
    std::vector<Formula> operands;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective c, std::string name, std::vector<Formula> operands);

  std::shared_ptr<const Node> node_;
};

inline Formula operator!(const Formula& f) { return Formula::negation(f); }
inline Formula operator&&(const Formula& x, const Formula& y) { return Formula::conjunction({x, y}); }
inline Formula operator||(const Formula& x, const Formula& y) { return Formula::disjunction({x, y}); }
inline Formula implies(const Formula& x, const Formula& y) { return Formula::implication(x, y); }
inline Formula iff(const Formula& x, const Formula& y) { return Formula::biconditional(x, y); }

/// Ordered set of atom names with index lookup.
class Universe {
 public:
  Universe() = default;
  explicit Universe(const std::vector<std::string>& names);

  /// Adds `name` if absent and returns its index. Throws InvalidInput for
  /// illegal names.
  std::size_t add(const std::string& name);
  /// Index of `name`, or npos.
  std::size_t find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != npos; }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }

  friend bool operator==(const Universe& x, const Universe& y) { return x.names_ == y.names_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses a formula. With a universe, every atom must belong to it.
/// Grammar (loosest first): `<->` (left-assoc), `->` (right-assoc), `|`, `&`, `!`.
Formula parse_formula(std::string_view source);
Formula parse_formula(std::string_view source, const Universe& universe);

/// Total truth assignment keyed by atom name.
using Valuation = std::map<std::string, bool, std::less<>>;

/// Classical evaluation. Throws UnknownAtomError for unassigned atoms.
bool evaluate(const Formula& f, const Valuation& v);

/// A formula with atoms resolved to universe indices, for evaluation over
/// many assignments.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Universe& universe);

  /// `value(i)` yields the truth of atom i.
  template <class Lookup>
  bool evaluate(const Lookup& value) const {
    return eval(0, value);
  }

 private:
  struct Op {
    Connective connective;
    std::size_t atom = 0;                 // Atom
    std::vector<std::size_t> operands;    // node indices
  };
  std::size_t compile(const Formula& f, const Universe& universe);

  template <class Lookup>
  bool eval(std::size_t at, const Lookup& value) const {
    const Op& op = ops_[at];
    switch (op.connective) {
      case Connective::True: return true;
      case Connective::False: return false;
      case Connective::Atom: return value(op.atom);
      case Connective::Not: return !eval(op.operands[0], value);
      case Connective::And:
        for (std::size_t o : op.operands)
          if (!eval(o, value)) return false;
        return true;
      case Connective::Or:
        for (std::size_t o : op.operands)
          if (eval(o, value)) return true;
        return false;
      case Connective::Implies: return !eval(op.operands[0], value) || eval(op.operands[1], value);
      case Connective::Iff: return eval(op.operands[0], value) == eval(op.operands[1], value);
    }
    return false;
  }

  std::vector<Op> ops_;  // ops_[0] is the root
};

}  // namespace favourlab
