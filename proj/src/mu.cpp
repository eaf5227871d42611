#include "relgit/mu.hpp"

#include <cmath>
#include <functional>

namespace relgit {

namespace {

void check_rank(const GitProblem& problem, const OnePS& lambda) {
  if (lambda.size() != problem.torus_rank)
    throw InputError("rank mismatch: one-parameter subgroup has " + std::to_string(lambda.size()) +
                     " entries, torus rank is " + std::to_string(problem.torus_rank));
}

}  // namespace

MuValue mu_of_pattern(const GitProblem& problem, const SupportPattern& pattern, const OnePS& lambda) {
  check_rank(problem, lambda);
  if (pattern.fiber_support.empty()) throw ZeroSectionError();
  for (const auto& v : problem.base_vars)
    if (pattern.base_support.count(v.name) && pairing(lambda, v.weight) < 0) return MuValue::infinite();
  std::optional<Integer> lowest;
  for (std::size_t i = 0; i < problem.fiber_vars.size(); ++i) {
    if (!pattern.fiber_support.count(problem.fiber_vars[i].name)) continue;
    Integer d = pairing(lambda, problem.shifted_fiber_weight(i));
    if (!lowest || d < *lowest) lowest = d;
  }
  return MuValue::finite(-*lowest);
}

MuValue mu(const GitProblem& problem, const PointSample& p, const OnePS& lambda) {
  validate_point(problem, p);
  return mu_of_pattern(problem, support(p), lambda);
}

MuValue mu_oracle(const GitProblem& problem, const PointSample& p, const OnePS& lambda,
                  unsigned degree_bound) {
  check_rank(problem, lambda);
  validate_point(problem, p);
  const std::size_t nb = problem.base_vars.size();

  // All base exponent vectors of total degree <= degree_bound, with value and degree.
  struct BaseMonomial {
    Rat value;
    Integer degree;
    unsigned total;
  };
  std::vector<BaseMonomial> monomials;
  std::vector<unsigned> e(nb, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k, unsigned left) {
    if (k == nb) {
      Rat value = 1;
      WeightVector w(problem.torus_rank);
      unsigned total = 0;
      for (std::size_t j = 0; j < nb; ++j) {
        const auto& var = problem.base_vars[j];
        for (unsigned r = 0; r < e[j]; ++r) value *= p.base_values.at(var.name);
        w += Integer(e[j]) * var.weight;
        total += e[j];
      }
      monomials.push_back({value, pairing(lambda, w), total});
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[k] = d;
      walk(k + 1, left - d);
    }
    e[k] = 0;
  };
  walk(0, degree_bound);

  for (const auto& m : monomials)
    if (m.total > 0 && m.value != 0 && m.degree < 0) return MuValue::infinite();

  std::optional<Integer> lowest;
  bool any_fiber = false;
  for (std::size_t i = 0; i < problem.fiber_vars.size(); ++i) {
    const Rat& g = p.fiber_values.at(problem.fiber_vars[i].name);
    if (g != 0) any_fiber = true;
    Integer dg = pairing(lambda, problem.shifted_fiber_weight(i));
    for (const auto& m : monomials) {
      if (m.value * g == 0) continue;
      Integer d = m.degree + dg;
      if (!lowest || d < *lowest) lowest = d;
    }
  }
  if (!any_fiber) throw ZeroSectionError();
  return MuValue::finite(-*lowest);
}

std::optional<PointSample> limit_point(const GitProblem& problem, const PointSample& p,
                                       const OnePS& lambda) {
  MuValue m = mu(problem, p, lambda);
  if (m.is_infinite()) return std::nullopt;
  const Integer attained = -m.value();
  PointSample limit = p;
  for (const auto& v : problem.base_vars)
    if (pairing(lambda, v.weight) > 0) limit.base_values[v.name] = 0;
  for (std::size_t i = 0; i < problem.fiber_vars.size(); ++i)
    if (pairing(lambda, problem.shifted_fiber_weight(i)) != attained)
      limit.fiber_values[problem.fiber_vars[i].name] = 0;
  return limit;
}

std::vector<double> lifted_orbit(const GitProblem& problem, const PointSample& p,
                                 const OnePS& lambda, double t) {
  check_rank(problem, lambda);
  std::vector<double> out;
  for (std::size_t i = 0; i < problem.fiber_vars.size(); ++i) {
    double c = static_cast<double>(p.fiber_values.at(problem.fiber_vars[i].name));
    double d = static_cast<double>(pairing(lambda, problem.shifted_fiber_weight(i)));
    out.push_back(c * std::pow(t, d));
  }
  return out;
}

}  // namespace relgit
