#include "favourlab/formula.hpp"

#include <cctype>

#include "favourlab/error.hpp"

namespace favourlab {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name == "true" || name == "false") return false;
  for (char ch : name) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

Formula::Formula() : Formula(constant(true)) {}

Formula Formula::make(Connective c, std::string name, std::vector<Formula> operands) {
  return Formula(std::make_shared<const Node>(Node{c, std::move(name), std::move(operands)}));
}

Formula Formula::constant(bool value) {
  static const Formula t = make(Connective::True, {}, {});
  static const Formula f = make(Connective::False, {}, {});
  return value ? t : f;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw InvalidInput("invalid atom name '" + name + "'");
  return make(Connective::Atom, std::move(name), {});
}

Formula Formula::negation(Formula operand) {
  return make(Connective::Not, {}, {std::move(operand)});
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.size() < 2) throw InvalidInput("conjunction needs at least two operands");
  return make(Connective::And, {}, std::move(operands));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.size() < 2) throw InvalidInput("disjunction needs at least two operands");
  return make(Connective::Or, {}, std::move(operands));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return make(Connective::Implies, {}, {std::move(antecedent), std::move(consequent)});
}

Formula Formula::biconditional(Formula left, Formula right) {
  return make(Connective::Iff, {}, {std::move(left), std::move(right)});
}

Formula Formula::all_of(std::vector<Formula> operands) {
  if (operands.empty()) return constant(true);
  if (operands.size() == 1) return operands.front();
  return conjunction(std::move(operands));
}

Formula Formula::any_of(std::vector<Formula> operands) {
  if (operands.empty()) return constant(false);
  if (operands.size() == 1) return operands.front();
  return disjunction(std::move(operands));
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.connective() != y.connective() || x.name() != y.name()) return false;
  auto xs = x.operands();
  auto ys = y.operands();
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!(xs[i] == ys[i])) return false;
  return true;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (connective() == Connective::Atom) {
    out.insert(name());
    return;
  }
  for (const Formula& o : operands()) o.collect_atoms(out);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 0;
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    default: return 5;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parenthesise, std::string& out) {
  if (parenthesise) out += '(';
  print(f, out);
  if (parenthesise) out += ')';
}

void print(const Formula& f, std::string& out) {
  const int prec = precedence(f.connective());
  auto ops = f.operands();
  switch (f.connective()) {
    case Connective::True: out += "true"; return;
    case Connective::False: out += "false"; return;
    case Connective::Atom: out += f.name(); return;
    case Connective::Not:
      out += '!';
      print_operand(ops[0], precedence(ops[0].connective()) < prec, out);
      return;
    case Connective::And:
    case Connective::Or: {
      const char* sep = f.connective() == Connective::And ? " & " : " | ";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += sep;
        print_operand(ops[i], precedence(ops[i].connective()) <= prec, out);
      }
      return;
    }
    case Connective::Implies:
      print_operand(ops[0], precedence(ops[0].connective()) <= prec, out);
      out += " -> ";
      print_operand(ops[1], precedence(ops[1].connective()) < prec, out);
      return;
    case Connective::Iff:
      print_operand(ops[0], precedence(ops[0].connective()) < prec, out);
      out += " <-> ";
      print_operand(ops[1], precedence(ops[1].connective()) <= prec, out);
      return;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (contains(n)) throw InvalidInput("duplicate atom '" + n + "'");
    add(n);
  }
}

std::size_t Universe::add(const std::string& name) {
  if (auto i = find(name); i != npos) return i;
  if (!is_valid_atom_name(name)) throw InvalidInput("invalid atom name '" + name + "'");
  names_.push_back(name);
  index_.emplace(name, names_.size() - 1);
  return names_.size() - 1;
}

std::size_t Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? npos : it->second;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view source, const Universe* universe) : src_(source), universe_(universe) {}

  Formula parse() {
    skip_space();
    if (pos_ == src_.size()) throw SyntaxError("empty formula", pos_);
    Formula f = bicond();
    skip_space();
    if (pos_ != src_.size()) throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (src_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula bicond() {
    Formula left = impl();
    while (accept("<->")) left = Formula::biconditional(left, impl());
    return left;
  }

  Formula impl() {
    Formula left = disj();
    if (accept("->")) return Formula::implication(left, impl());
    return left;
  }

  Formula disj() {
    std::vector<Formula> ops{conj()};
    while (accept("|")) ops.push_back(conj());
    return Formula::any_of(std::move(ops));
  }

  Formula conj() {
    std::vector<Formula> ops{neg()};
    while (accept("&")) ops.push_back(neg());
    return Formula::all_of(std::move(ops));
  }

  Formula neg() {
    skip_space();
    if (pos_ == src_.size()) throw SyntaxError("unexpected end of formula", pos_);
    if (accept("!")) return Formula::negation(neg());
    if (accept("(")) {
      Formula inner = bicond();
      if (!accept(")")) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    if (pos_ == start) throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    std::string word(src_.substr(start, pos_ - start));
    if (word == "true") return Formula::constant(true);
    if (word == "false") return Formula::constant(false);
    if (universe_ && !universe_->contains(word)) throw UnknownAtomError(word);
    return Formula::atom(std::move(word));
  }

  static bool is_ident_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  }

  std::string_view src_;
  const Universe* universe_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view source) { return Parser(source, nullptr).parse(); }

Formula parse_formula(std::string_view source, const Universe& universe) {
  return Parser(source, &universe).parse();
}

// ---------------------------------------------------------------------------
// Evaluation

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.connective()) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw UnknownAtomError(f.name());
      return it->second;
    }
    case Connective::Not: return !evaluate(f.operands()[0], v);
    case Connective::And:
      for (const Formula& o : f.operands())
        if (!evaluate(o, v)) return false;
      return true;
    case Connective::Or:
      for (const Formula& o : f.operands())
        if (evaluate(o, v)) return true;
      return false;
    case Connective::Implies: return !evaluate(f.operands()[0], v) || evaluate(f.operands()[1], v);
    case Connective::Iff: return evaluate(f.operands()[0], v) == evaluate(f.operands()[1], v);
  }
  return false;
}

CompiledFormula::CompiledFormula(const Formula& f, const Universe& universe) { compile(f, universe); }

std::size_t CompiledFormula::compile(const Formula& f, const Universe& universe) {
  const std::size_t at = ops_.size();
  ops_.push_back(Op{f.connective(), 0, {}});
  if (f.connective() == Connective::Atom) {
    std::size_t i = universe.find(f.name());
    if (i == Universe::npos) throw UnknownAtomError(f.name());
    ops_[at].atom = i;
    return at;
  }
  std::vector<std::size_t> children;
  children.reserve(f.operands().size());
  for (const Formula& o : f.operands()) children.push_back(compile(o, universe));
  ops_[at].operands = std::move(children);
  return at;
}

}  // namespace favourlab
