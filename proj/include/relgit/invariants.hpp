#pragma once

#include "relgit/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relgit {

/// A torus-invariant monomial in base and fiber variables. `l_degree` is its
/// total degree in fiber variables, i.e. the power of L it is a section of.
struct MonomialInvariant {
  Exponents exponents;
  unsigned l_degree = 0;

  unsigned total_degree() const;
  std::string to_string() const { return monomial_to_string(exponents); }
  friend bool operator==(const MonomialInvariant&, const MonomialInvariant&) = default;
};

struct NamedGenerator {
  std::string name;
  MonomialInvariant monomial;
};

/// lead - trail, both monomials in generator names.
struct Binomial {
  Exponents lead;
  Exponents trail;
  std::string to_string() const;
};

struct QuotientPresentation {
  /// l_degree 0: coordinates on Spec A^G.
  std::vector<NamedGenerator> base_invariant_generators;
  /// Positive l_degree: weighted projective coordinates.
  std::vector<NamedGenerator> proj_generators;
  std::vector<Binomial> relations;
  /// gcd of the proj generator l_degrees; > 1 means a Veronese subring would
  /// give a standard-graded presentation. Not applied.
  unsigned veronese_gcd = 1;

  std::vector<unsigned> proj_weights() const;
  /// "A^1 x P(1,1,2)"
  std::string ambient_ascii() const;
  /// "𝔸¹ × ℙ(1,1,2)"
  std::string ambient() const;
};

/// Every nonconstant weight-zero monomial of total degree <= max_total_degree
/// (fiber variables carry the shift once per unit of fiber degree). Ordered by
/// total degree, then lexicographically descending in declaration order.
std::vector<MonomialInvariant> invariant_monomials(const GitProblem& problem, unsigned max_total_degree);

/// Monomials of the list that are not a product of two monomials of the list.
std::vector<MonomialInvariant> minimal_generators(const std::vector<MonomialInvariant>& monomials);

/// Binomial relations among the generators found up to total generator-degree
/// `max_syzygy_degree`. Candidate binomials come from coinciding expansions; a
/// candidate is dropped when its two sides are already connected by moves
/// along earlier relations, i.e. it lies in the ideal they generate.
std::vector<Binomial> relations(const std::vector<NamedGenerator>& generators, unsigned max_syzygy_degree);

/// Substitutes generator monomials into a relation. Both sides agree for
/// every relation returned by `relations`.
std::pair<Exponents, Exponents> expand(const Binomial& b, const std::vector<NamedGenerator>& generators);

/// 2 * the largest total degree among the generators.
unsigned default_syzygy_bound(const std::vector<MonomialInvariant>& generators);

QuotientPresentation quotient_presentation(const GitProblem& problem, unsigned max_total_degree,
                                           unsigned max_syzygy_degree);

/// An invariant section of positive L-degree (total degree <= bound) that does
/// not vanish at p; its existence certifies semistability.
std::optional<MonomialInvariant> semistable_via_sections(const GitProblem& problem, const PointSample& p,
                                                         unsigned max_total_degree);

}  // namespace relgit
