#include "relgit/smith.hpp"

#include <algorithm>

namespace relgit {

std::vector<Integer> smith_divisors(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw InputError("ragged integer matrix");

  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> out;
  out.reserve(diag);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) {
        out.resize(diag, Integer(0));
        return out;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        dirty |= a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        dirty |= a[t][j] != 0;
      }
      if (dirty) continue;

      // pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::optional<Integer> lattice_index(std::size_t rank, const std::vector<WeightVector>& generators) {
  if (rank == 0) return Integer(1);
  IntMatrix m;
  for (const auto& g : generators) {
    if (g.size() != rank) throw InputError("lattice generator of wrong rank");
    m.emplace_back(g.begin(), g.end());
  }
  if (m.size() < rank) return std::nullopt;
  Integer index = 1;
  for (const auto& d : smith_divisors(m)) {
    if (d == 0) return std::nullopt;
    index *= d;
  }
  return index;
}

}  // namespace relgit
