#pragma once

#include "relgit/exact.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace relgit {

/// Variable name -> exponent. Zero exponents are never stored.
using Exponents = std::map<std::string, unsigned>;

struct Term {
  Rat coefficient;
  Exponents exponents;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with rational coefficients in named variables. Terms are
/// kept merged, nonzero, and sorted by exponent map, so equality is structural.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  /// Accepts sums of terms like "t*z^2 - x*y" or "3/2*x^2*y + 1".
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Evaluates at the assignment; throws InputError on an unassigned variable.
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  /// Canonical text form, re-parseable by `parse`.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Exponents& e);

}  // namespace relgit
