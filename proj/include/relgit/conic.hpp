#pragma once

#include "relgit/stability.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

/// Combinatorial model of the expanded degeneration X[n] -> A^{n+1} of a
/// conic degenerating to two lines Y u Y', with the torus G[n] = G_m^n.
///
/// Over a point q of A^{n+1} whose vanishing coordinates are i_1 < ... < i_r,
/// the fibre is a chain Delta_{I_0} u ... u Delta_{I_r} with
/// I_k = {i_k, ..., i_{k+1} - 1}, i_0 = 0, i_{r+1} = n + 2. Index 0 is Y,
/// index n + 1 is Y'. Only interval combinatorics and torus weights are
/// modeled; no scheme is built.
namespace relgit::conic {

struct Stratum {
  unsigned n = 0;
  /// Indices i in {1, ..., n+1} with t_i = 0.
  std::set<unsigned> vanishing;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ChainFibre {
  std::vector<std::vector<unsigned>> intervals;
};

/// A point of the configuration at a nonzero coordinate on the interior of
/// one chain component.
struct MarkedPoint {
  std::size_t interval = 0;
  Rat coordinate;
};

/// A length-n subscheme of a chain fibre, up to the data that matters here:
/// how much of it lies on each component interior.
struct ChainConfiguration {
  Stratum stratum;
  std::vector<unsigned> lengths;
  std::vector<MarkedPoint> marked_points;
};

/// Orientation of mu relative to the weight of G[n] on the fibre of L at the
/// limit point.
enum class SignConvention {
  /// mu = -(fibre weight): stable iff mu > 0 for all nontrivial lambda.
  Engine,
  /// mu = +(fibre weight).
  FibreWeight,
};

/// Fibre weights of L = L_1^{n+1} at the torus-fixed points of the central
/// chain Delta_0 u ... u Delta_{n+1}.
///
/// Each O_{pi_i}(n+1) factor, raised to a_i (a_n = 1), is linearized by
/// u_i^l v_i^{n+1-l} -> sigma_i^{i-(n+1)+l} u_i^l v_i^{n+1-l}. Along the chain,
/// components left of Delta_i see v_i != 0 (l = 0) and components right of it
/// see u_i != 0 (l = n+1). The O_X(a_0) factor contributes nothing: every
/// inserted component maps to the fixed node of X.
struct WeightTable {
  unsigned n = 0;
  /// a[i] for i = 1..n; a[0] holds a_0 and a[n] = 1.
  std::vector<Integer> a;
  SignConvention sign = SignConvention::Engine;
  WeightVector shift;
  /// node[j] for j = 1..n+1 is the weight at Delta_{j-1} n Delta_j;
  /// node[0] repeats node[1] (Delta_0 carries a constant weight).
  std::vector<WeightVector> node;

  /// Weights at the two limit points of component c in 0..n+1: the end
  /// reached when sigma_c -> 0 with s_c > 0, then with s_c < 0.
  std::pair<WeightVector, WeightVector> component_limits(unsigned c) const;
  int sign_factor() const { return sign == SignConvention::Engine ? -1 : 1; }
};

ChainFibre chain(const Stratum& stratum);

/// Throws InputError unless lengths match the interval count, sum to n, and
/// marked points (when present) match the lengths.
void validate_config(const ChainConfiguration& config);

/// length(Z n Delta_{I_k}^o) == |I_k n {1..n}| for every k.
bool admissible(const ChainConfiguration& config);

/// `a` lists a_1 > ... > a_{n-1} > 0 (empty for n = 1). n must be 1..3.
WeightTable build_weight_table(unsigned n, const std::vector<Integer>& a,
                               SignConvention sign = SignConvention::Engine,
                               std::optional<WeightVector> shift = std::nullopt,
                               Integer a0 = 1000);
/// a_i = 10^{n-i}.
std::vector<Integer> default_parameters(unsigned n);

/// Characters whose nonnegativity says lim lambda(sigma).q exists in A^{n+1}:
/// t_i scales by sigma^{s_i - s_{i-1}} (s_0 = s_{n+1} = 0), and every nonzero
/// t_i needs a nonnegative exponent.
std::vector<WeightVector> base_limit_rows(const Stratum& stratum);

/// Weight of lambda on the fibre of L at the limit configuration (a formal sum
/// over points), or nullopt when the base limit does not exist.
std::optional<Integer> fibre_weight(const WeightTable& table, const ChainConfiguration& config,
                                    const OnePS& lambda);

/// Contribution of one point on the interior of chain component `interval`:
/// sign_factor() * <lambda, weight at its limit>, or nullopt (mu = infinity).
std::optional<Rat> point_mu(const WeightTable& table, const Stratum& stratum, std::size_t interval,
                            const OnePS& lambda);

/// sign_factor() * fibre_weight, or nullopt (mu = infinity).
std::optional<Rat> mu_config(const WeightTable& table, const ChainConfiguration& config,
                             const OnePS& lambda);

/// Exact classification: mu_config is linear on each closed sign orthant of
/// lambda, so each orthant is one pair of cone problems.
Verdict classify_config(const WeightTable& table, const ChainConfiguration& config);

/// Order of the subgroup of G[n] preserving the marked configuration as a set
/// (nullopt for infinite). An interior component Delta_{I_k} ~ G_m is scaled
/// by sigma_{i_k}; components containing Y or Y' are fixed pointwise.
std::optional<Integer> config_stabilizer(const ChainConfiguration& config);

/// Every vanishing set in {1..n+1}, including the empty one, ordered by size
/// then lexicographically.
std::vector<Stratum> all_strata(unsigned n);
/// Every length vector for the stratum's intervals summing to n.
std::vector<std::vector<unsigned>> all_length_vectors(const Stratum& stratum);
/// The unique admissible length vector on the stratum.
std::vector<unsigned> admissible_lengths(const Stratum& stratum);

struct SweepRow {
  ChainConfiguration config;
  bool admissible = false;
  Verdict verdict;
};

std::vector<SweepRow> sweep(const WeightTable& table);

/// Component H_{i,j} of the central fibre of the quotient: generic member has
/// i points on Y^o and j on (Y')^o, living over the stratum {i+1}.
struct HilbertComponent {
  unsigned y_points = 0;
  unsigned y_prime_points = 0;
  Stratum generic_stratum;
  std::string name() const;
};

struct StratumIncidence {
  Stratum stratum;
  std::vector<unsigned> lengths;
  /// Indices into HilbertIncidence::components whose closure contains the
  /// stable locus over this stratum.
  std::vector<std::size_t> in_closure_of;
  /// Dimension of the stable locus over the stratum modulo G[n].
  unsigned dimension = 0;
};

struct Intersection {
  std::vector<std::size_t> components;
  std::vector<Stratum> strata;
  /// Largest locus dimension among `strata`.
  unsigned dimension = 0;
  /// Number of strata of that dimension (1 means irreducible).
  std::size_t top_strata = 0;
};

struct HilbertIncidence {
  unsigned n = 0;
  std::vector<HilbertComponent> components;
  std::vector<StratumIncidence> strata;
  /// All subsets of at least two components, by size then lexicographically.
  std::vector<Intersection> intersections;
  /// Every subset of components meets, so the dual complex is a full simplex.
  bool dual_complex_is_simplex = false;
};

/// Closure incidence by the merge rule: the stable locus over a deeper
/// stratum lies in the closure of H_{i,j} exactly when merging its intervals
/// back to the two intervals of {i+1} yields lengths (i, j).
HilbertIncidence hilbert_components(unsigned n);

std::string to_string(const Stratum& s);
std::string to_string(const ChainFibre& f);
std::string lengths_to_string(const std::vector<unsigned>& lengths);

/// Parses a JSON configuration file: {"n": 2, "vanishing": [1,3],
/// "lengths": [0,2,0], "marked_points": [[1,"1"],[1,"-1"]], "a": [10]}.
struct ConfigFile {
  ChainConfiguration config;
  std::optional<std::vector<Integer>> a;
};
ConfigFile parse_config(std::string_view text);

}  // namespace relgit::conic
