#pragma once

#include <cstddef>
#include <span>

#include "favourlab/formula.hpp"

namespace favourlab {

/// Largest number of distinct atoms the truth-table procedures accept.
inline constexpr std::size_t kDefaultAtomBound = 20;

/// True iff every assignment satisfying all premises satisfies the
/// conclusion. Enumerates all assignments over the atoms involved; throws
/// BoundExceeded above `atom_bound` atoms.
bool entails(std::span<const Formula> premises, const Formula& conclusion,
             std::size_t atom_bound = kDefaultAtomBound);

/// True iff some assignment satisfies every formula in `formulas`.
bool consistent(std::span<const Formula> formulas, std::size_t atom_bound = kDefaultAtomBound);

}  // namespace favourlab
