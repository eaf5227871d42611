#pragma once

#include "relgit/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relgit {

/// Hilbert-Mumford weight mu(lambda, p), or infinity when lim lambda(t).p
/// does not exist because the base limit fails.
class MuValue {
public:
  static MuValue infinite() { return MuValue(); }
  static MuValue finite(Integer v) { return MuValue(std::move(v)); }

  bool is_infinite() const { return !value_; }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Integer& value() const { return *value_; }

  bool is_negative() const { return value_ && *value_ < 0; }
  bool is_positive() const { return !value_ || *value_ > 0; }

  std::string to_string() const { return value_ ? value_->str() : "inf"; }
  friend bool operator==(const MuValue&, const MuValue&) = default;

private:
  MuValue() = default;
  explicit MuValue(Integer v) : value_(std::move(v)) {}
  std::optional<Integer> value_;
};

/// mu(lambda, p) = -min { <lambda, w_i + shift> : fiber coordinate i nonzero },
/// or infinity if some nonzero base coordinate has <lambda, w_j> < 0.
/// Throws ZeroSectionError or InputError (rank mismatch, undeclared variables).
MuValue mu(const GitProblem& problem, const PointSample& p, const OnePS& lambda);

/// Same quantity from support data only.
MuValue mu_of_pattern(const GitProblem& problem, const SupportPattern& pattern, const OnePS& lambda);

/// Independent oracle: enumerates monomials a*g (a a base monomial of total
/// degree <= degree_bound, g a fiber generator), evaluates each at p* by exact
/// arithmetic, and returns minus the smallest lambda-degree among the
/// nonvanishing ones. A nonvanishing base monomial of negative lambda-degree
/// means the degrees are unbounded below, reported as infinity.
MuValue mu_oracle(const GitProblem& problem, const PointSample& p, const OnePS& lambda,
                  unsigned degree_bound);

/// lim_{t->0} lambda(t).p as a point, or nullopt when mu is infinite. The
/// result is a fixed point of lambda.
std::optional<PointSample> limit_point(const GitProblem& problem, const PointSample& p,
                                       const OnePS& lambda);

/// Lifted fiber coordinates c_i * t^<lambda, w_i + shift> at a numeric t, in
/// declaration order (zero coordinates stay zero). Floating point; only for
/// orbit-flow diagnostics, never for decisions.
std::vector<double> lifted_orbit(const GitProblem& problem, const PointSample& p,
                                 const OnePS& lambda, double t);

}  // namespace relgit
