#pragma once

#include "relgit/exact.hpp"
#include "relgit/polynomial.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace relgit {

struct Variable {
  std::string name;
  WeightVector weight;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// A split torus G_m^r acting diagonally on a projective-over-affine model.
///
/// Base variables generate the graded coordinate ring A of the base S; fiber
/// variables generate V, so X lives in P(V) over S. A point's fiber coordinate
/// of weight w scales by t^<lambda, w + shift> under lambda(t). The shift twists
/// the linearization without changing the underlying line bundle.
struct GitProblem {
  std::size_t torus_rank = 0;
  std::vector<Variable> base_vars;
  std::vector<Variable> fiber_vars;
  WeightVector linearization_shift;
  /// Optional equations cutting X out of P(V) over S. Used only to validate
  /// sample points.
  std::vector<Polynomial> ideal;

  /// Fiber weight with the linearization shift applied.
  WeightVector shifted_fiber_weight(std::size_t i) const {
    return fiber_vars[i].weight + linearization_shift;
  }
  std::size_t variable_count() const { return base_vars.size() + fiber_vars.size(); }
  /// Base variables first, then fiber variables.
  const Variable& variable(std::size_t k) const {
    return k < base_vars.size() ? base_vars[k] : fiber_vars[k - base_vars.size()];
  }
  bool is_fiber(std::size_t k) const { return k >= base_vars.size(); }

  /// Throws InputError unless every invariant of the model holds.
  void validate() const;

  friend bool operator==(const GitProblem&, const GitProblem&) = default;
};

/// Exact rational coordinates of a point p together with its lift p*.
struct PointSample {
  std::map<std::string, Rat> base_values;
  std::map<std::string, Rat> fiber_values;

  friend bool operator==(const PointSample&, const PointSample&) = default;
};

/// Which coordinates are nonzero. For diagonal torus actions this determines
/// every stability quantity of the point.
struct SupportPattern {
  std::set<std::string> base_support;
  std::set<std::string> fiber_support;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;
  friend auto operator<=>(const SupportPattern&, const SupportPattern&) = default;
};

/// Raised when every fiber coordinate of a point vanishes: the lift lies in
/// the zero section 0_S and does not come from a point of P(V).
class ZeroSectionError : public InputError {
public:
  ZeroSectionError() : InputError("all fiber coordinates vanish: lift lies in 0_S") {}
};

/// Parses the JSON problem format documented in README.md. Syntax errors
/// report line and column.
GitProblem parse_problem(std::string_view text);
std::string serialize_problem(const GitProblem& problem);
GitProblem load_problem(const std::string& path);

/// Parses "x=1,y=0,u=1/2" against the problem's declared variables.
PointSample parse_point(const GitProblem& problem, std::string_view text);
/// Same, from a JSON object {"x": "1", "u": "1/2", ...}.
PointSample parse_point_json(const GitProblem& problem, std::string_view text);
std::string point_to_string(const GitProblem& problem, const PointSample& p);

/// Checks that `p` assigns every declared variable and nothing else.
void validate_point(const GitProblem& problem, const PointSample& p);

bool check_on_ideal(const GitProblem& problem, const PointSample& p);

/// Throws ZeroSectionError when no fiber value is nonzero.
SupportPattern support(const PointSample& p);

/// A point with value 1 on the pattern and 0 elsewhere.
PointSample representative_point(const GitProblem& problem, const SupportPattern& pattern);

std::string pattern_to_string(const SupportPattern& pattern);

}  // namespace relgit
