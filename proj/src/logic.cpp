#include "favourlab/logic.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "favourlab/error.hpp"

namespace favourlab {

namespace {

struct TruthTable {
  Universe universe;
  std::vector<CompiledFormula> formulas;
};

TruthTable compile_all(std::span<const Formula> formulas, std::size_t atom_bound) {
  std::set<std::string> atoms;
  for (const Formula& f : formulas) f.collect_atoms(atoms);
  if (atoms.size() > atom_bound)
    throw BoundExceeded("formula set mentions " + std::to_string(atoms.size()) +
                        " atoms; bound is " + std::to_string(atom_bound));
  TruthTable table;
  for (const auto& a : atoms) table.universe.add(a);
  table.formulas.reserve(formulas.size());
  for (const Formula& f : formulas) table.formulas.emplace_back(f, table.universe);
  return table;
}

}  // namespace

bool entails(std::span<const Formula> premises, const Formula& conclusion, std::size_t atom_bound) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  TruthTable table = compile_all(all, atom_bound);
  const std::uint64_t count = std::uint64_t{1} << table.universe.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto value = [mask](std::size_t i) { return ((mask >> i) & 1U) != 0; };
    bool premises_hold = true;
    for (std::size_t i = 0; i + 1 < table.formulas.size() && premises_hold; ++i)
      premises_hold = table.formulas[i].evaluate(value);
    if (premises_hold && !table.formulas.back().evaluate(value)) return false;
  }
  return true;
}

bool consistent(std::span<const Formula> formulas, std::size_t atom_bound) {
  return !entails(formulas, Formula::constant(false), atom_bound);
}

}  // namespace favourlab
