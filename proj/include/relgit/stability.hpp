#pragma once

#include "relgit/mu.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relgit {

enum class Stability { Stable, StrictlySemistable, Unstable };

std::string to_string(Stability s);

/// Outcome of the relative Hilbert-Mumford test.
///
/// Unstable carries a witness with finite negative mu; StrictlySemistable a
/// nonzero witness with mu = 0; Stable carries no witness.
struct Verdict {
  Stability status = Stability::Stable;
  std::optional<OnePS> witness;
  std::optional<MuValue> witness_mu;
};

struct PatternRow {
  SupportPattern pattern;
  Verdict verdict;
};

struct PatternTable {
  std::vector<PatternRow> rows;
  /// Set when the problem has an ideal: rows are computed per pattern and it
  /// is not checked whether a point of X realizes each pattern.
  bool realizability_unchecked = false;
};

/// Decides stability of p by two exact cone problems over Z^r:
///   unstable    iff some lambda has <lambda, w_j> >= 0 on base support and
///               <lambda, w_i + shift> >= 1 on fiber support;
///   not stable  iff the closed cone with all those rows >= 0 is not {0}.
/// The witness is re-checked with `mu`; a mismatch throws InvariantViolation.
Verdict classify(const GitProblem& problem, const PointSample& p);
Verdict classify_pattern(const GitProblem& problem, const SupportPattern& pattern);

inline constexpr std::size_t kDefaultPatternCap = 16;

/// One row per (subset of base variables, nonempty subset of fiber
/// variables), ordered by base mask then fiber mask in declaration order.
/// Throws InputError when the problem has more than `variable_cap` variables.
PatternTable classify_patterns(const GitProblem& problem, std::size_t variable_cap = kDefaultPatternCap);

/// Order of the stabilizer of p in G_m^r: the index of the character lattice
/// generated by base-support weights and differences of fiber-support weights,
/// or nullopt (infinite) when that lattice has rank < r.
std::optional<Integer> stabilizer_order(const GitProblem& problem, const PointSample& p);
std::optional<Integer> stabilizer_order(const GitProblem& problem, const SupportPattern& pattern);

}  // namespace relgit
