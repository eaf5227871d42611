#pragma once

#include "relgit/exact.hpp"

#include <optional>
#include <vector>

namespace relgit {

/// Homogeneous system over the cocharacter lattice:
///   <lambda, w> >= 0 for w in nonneg_rows,
///   <lambda, w> >= 1 for w in strict_rows.
/// The second form is the integral encoding of <lambda, w> > 0; the solution
/// set is a cone, so any positive rational solution scales to an integral one.
struct ConeProblem {
  std::size_t rank = 0;
  std::vector<WeightVector> nonneg_rows;
  std::vector<WeightVector> strict_rows;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<OnePS> witness;
};

/// Exact Fourier-Motzkin feasibility with back-substituted integral witness.
/// Throws InputError when a row's length differs from `rank`.
FeasibilityResult solve_cone(const ConeProblem& problem);

/// A nonzero integral point of {lambda : <lambda, w> >= 0 for all rows}, or
/// nullopt when the cone is {0}. Tries the strict rows +e_1, -e_1, +e_2, ...
/// in that order, so the result is deterministic.
std::optional<OnePS> cone_has_nonzero(std::size_t rank, const std::vector<WeightVector>& rows);

/// True when lambda satisfies every row of the problem exactly.
bool satisfies(const ConeProblem& problem, const OnePS& lambda);

}  // namespace relgit
