#include "relgit/cone.hpp"

#include <algorithm>
#include <map>

namespace relgit {

namespace {

// a . x >= b
struct Inequality {
  std::vector<Rat> a;
  Rat b;
};

// Scales the row to a primitive integer normal so duplicates collapse.
void normalize(Inequality& row) {
  Integer den = 1;
  for (const auto& c : row.a)
    if (c != 0) den = lcm(den, denominator(c));
  Integer g = 0;
  for (auto& c : row.a) {
    c *= den;
    if (c != 0) g = gcd(g, numerator(c));
  }
  row.b *= den;
  if (g > 1) {
    for (auto& c : row.a) c /= g;
    row.b /= g;
  }
}

using System = std::vector<Inequality>;

// Merge rows with identical normals, keeping the tightest right-hand side.
// Returns false if some row reads 0 >= b with b > 0.
bool simplify(System& sys) {
  std::map<std::vector<Rat>, Rat> tightest;
  for (auto& row : sys) {
    normalize(row);
    bool zero = std::all_of(row.a.begin(), row.a.end(), [](const Rat& c) { return c == 0; });
    if (zero) {
      if (row.b > 0) return false;
      continue;
    }
    auto [it, inserted] = tightest.emplace(row.a, row.b);
    if (!inserted && row.b > it->second) it->second = row.b;
  }
  sys.clear();
  for (auto& [a, b] : tightest) sys.push_back({a, b});
  return true;
}

// Eliminates variable k, producing constraints on x_0..x_{k-1} only.
System eliminate(const System& sys, std::size_t k) {
  System out, pos, neg;
  for (const auto& row : sys) {
    if (row.a[k] > 0)
      pos.push_back(row);
    else if (row.a[k] < 0)
      neg.push_back(row);
    else
      out.push_back(row);
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      // (-n_k) * p + p_k * n cancels x_k
      Rat cp = -n.a[k], cn = p.a[k];
      Inequality row;
      row.a.resize(p.a.size());
      for (std::size_t i = 0; i < p.a.size(); ++i) row.a[i] = cp * p.a[i] + cn * n.a[i];
      row.a[k] = 0;
      row.b = cp * p.b + cn * n.b;
      out.push_back(std::move(row));
    }
  }
  return out;
}

// Picks a value in [lo, hi], preferring 0, then the integer nearest to 0.
Rat choose_value(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  auto in_range = [&](const Rat& v) { return (!lo || v >= *lo) && (!hi || v <= *hi); };
  if (in_range(Rat(0))) return 0;
  if (lo && *lo > 0) {
    Rat c(ceil(*lo));
    return in_range(c) ? c : *lo;
  }
  Rat f(floor(*hi));
  return in_range(f) ? f : *hi;
}

}  // namespace

bool satisfies(const ConeProblem& problem, const OnePS& lambda) {
  for (const auto& w : problem.nonneg_rows)
    if (pairing(lambda, w) < 0) return false;
  for (const auto& w : problem.strict_rows)
    if (pairing(lambda, w) < 1) return false;
  return true;
}

FeasibilityResult solve_cone(const ConeProblem& problem) {
  const std::size_t r = problem.rank;
  System sys;
  auto add_rows = [&](const std::vector<WeightVector>& rows, int rhs) {
    for (const auto& w : rows) {
      if (w.size() != r)
        throw InputError("cone row has " + std::to_string(w.size()) + " entries, expected " +
                         std::to_string(r));
      Inequality row;
      row.a.assign(w.begin(), w.end());
      row.b = rhs;
      sys.push_back(std::move(row));
    }
  };
  add_rows(problem.nonneg_rows, 0);
  add_rows(problem.strict_rows, 1);

  // levels[k] constrains x_0..x_{k-1}; levels[r] is the input system.
  std::vector<System> levels(r + 1);
  if (!simplify(sys)) return {};
  levels[r] = std::move(sys);
  for (std::size_t k = r; k-- > 0;) {
    levels[k] = eliminate(levels[k + 1], k);
    if (!simplify(levels[k])) return {};
  }

  std::vector<Rat> x(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::optional<Rat> lo, hi;
    for (const auto& row : levels[k + 1]) {
      if (row.a[k] == 0) continue;
      Rat rest = row.b;
      for (std::size_t i = 0; i < k; ++i) rest -= row.a[i] * x[i];
      Rat bound = rest / row.a[k];
      if (row.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi)
      throw InvariantViolation("Fourier-Motzkin back-substitution found an empty interval");
    x[k] = choose_value(lo, hi);
  }

  Integer den = 1;
  for (const auto& v : x) den = lcm(den, denominator(v));
  std::vector<Integer> entries;
  entries.reserve(r);
  for (const auto& v : x) entries.push_back(numerator(Rat(v * den)));
  OnePS witness(std::move(entries));
  if (!satisfies(problem, witness))
    throw InvariantViolation("cone witness " + witness.to_string() + " fails re-substitution");
  return {true, std::move(witness)};
}

std::optional<OnePS> cone_has_nonzero(std::size_t rank, const std::vector<WeightVector>& rows) {
  for (std::size_t i = 0; i < rank; ++i) {
    for (int sign : {1, -1}) {
      ConeProblem probe{rank, rows, {WeightVector::unit(rank, i, sign)}};
      auto result = solve_cone(probe);
      if (result.feasible) return result.witness;
    }
  }
  return std::nullopt;
}

}  // namespace relgit
