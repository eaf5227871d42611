#pragma once

#include "relgit/exact.hpp"

#include <optional>
#include <vector>

namespace relgit {

/// Row-major integer matrix; all rows must have the same length.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Elementary divisors d1 | d2 | ... of the Smith normal form, nonnegative,
/// padded with zeros to min(rows, cols).
std::vector<Integer> smith_divisors(const IntMatrix& m);

/// Index [Z^rank : M] of the lattice spanned by `generators`, or nullopt when
/// M has rank < `rank` (infinite index).
std::optional<Integer> lattice_index(std::size_t rank, const std::vector<WeightVector>& generators);

}  // namespace relgit
