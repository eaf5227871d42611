#include "relgit/stability.hpp"

#include "relgit/cone.hpp"
#include "relgit/smith.hpp"

namespace relgit {

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
  }
  return "?";
}

namespace {

struct SupportRows {
  std::vector<WeightVector> base;
  std::vector<WeightVector> fiber;
};

SupportRows support_rows(const GitProblem& problem, const SupportPattern& pattern) {
  SupportRows rows;
  for (const auto& v : problem.base_vars)
    if (pattern.base_support.count(v.name)) rows.base.push_back(v.weight);
  for (std::size_t i = 0; i < problem.fiber_vars.size(); ++i)
    if (pattern.fiber_support.count(problem.fiber_vars[i].name))
      rows.fiber.push_back(problem.shifted_fiber_weight(i));
  return rows;
}

}  // namespace

Verdict classify_pattern(const GitProblem& problem, const SupportPattern& pattern) {
  if (pattern.fiber_support.empty()) throw ZeroSectionError();
  const std::size_t r = problem.torus_rank;
  SupportRows rows = support_rows(problem, pattern);

  Verdict v;
  auto destabilizing = solve_cone({r, rows.base, rows.fiber});
  if (destabilizing.feasible) {
    v.status = Stability::Unstable;
    v.witness = destabilizing.witness;
  } else {
    std::vector<WeightVector> closed = rows.base;
    closed.insert(closed.end(), rows.fiber.begin(), rows.fiber.end());
    if (auto lambda = cone_has_nonzero(r, closed)) {
      v.status = Stability::StrictlySemistable;
      v.witness = lambda;
    }
  }
  if (!v.witness) return v;

  v.witness_mu = mu_of_pattern(problem, pattern, *v.witness);
  const MuValue& m = *v.witness_mu;
  bool ok = v.status == Stability::Unstable ? m.is_negative()
                                            : (m.is_finite() && m.value() == 0 && !v.witness->is_zero());
  if (!ok)
    throw InvariantViolation("witness " + v.witness->to_string() + " has mu = " + m.to_string() +
                             ", inconsistent with verdict " + to_string(v.status));
  return v;
}

Verdict classify(const GitProblem& problem, const PointSample& p) {
  validate_point(problem, p);
  Verdict v = classify_pattern(problem, support(p));
  if (v.witness) {
    MuValue check = mu(problem, p, *v.witness);
    if (!(check == *v.witness_mu))
      throw InvariantViolation("witness mu changed between pattern and point evaluation");
  }
  return v;
}

PatternTable classify_patterns(const GitProblem& problem, std::size_t variable_cap) {
  if (problem.variable_count() > variable_cap)
    throw InputError("pattern enumeration is capped at " + std::to_string(variable_cap) +
                     " variables; problem has " + std::to_string(problem.variable_count()));
  PatternTable table;
  table.realizability_unchecked = !problem.ideal.empty();
  const std::size_t nb = problem.base_vars.size(), nf = problem.fiber_vars.size();
  for (std::size_t bm = 0; bm < (std::size_t{1} << nb); ++bm) {
    for (std::size_t fm = 1; fm < (std::size_t{1} << nf); ++fm) {
      SupportPattern s;
      for (std::size_t j = 0; j < nb; ++j)
        if (bm >> j & 1) s.base_support.insert(problem.base_vars[j].name);
      for (std::size_t i = 0; i < nf; ++i)
        if (fm >> i & 1) s.fiber_support.insert(problem.fiber_vars[i].name);
      table.rows.push_back({s, classify_pattern(problem, s)});
    }
  }
  return table;
}

std::optional<Integer> stabilizer_order(const GitProblem& problem, const SupportPattern& pattern) {
  if (pattern.fiber_support.empty()) throw ZeroSectionError();
  std::vector<WeightVector> generators;
  for (const auto& v : problem.base_vars)
    if (pattern.base_support.count(v.name)) generators.push_back(v.weight);
  std::optional<WeightVector> anchor;
  for (const auto& v : problem.fiber_vars) {
    if (!pattern.fiber_support.count(v.name)) continue;
    if (!anchor)
      anchor = v.weight;
    else
      generators.push_back(v.weight - *anchor);
  }
  return lattice_index(problem.torus_rank, generators);
}

std::optional<Integer> stabilizer_order(const GitProblem& problem, const PointSample& p) {
  validate_point(problem, p);
  return stabilizer_order(problem, support(p));
}

}  // namespace relgit
