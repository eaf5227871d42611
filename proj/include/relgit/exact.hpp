#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relgit {

using Integer = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always normalized (lowest terms, positive denominator).
using Rat = boost::multiprecision::cpp_rational;

/// Malformed or inconsistent user input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computed result failed its own re-verification. The CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Parses "n", "-n", or "p/q". Throws InputError on anything else or q == 0.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const Integer& z);

Integer floor(const Rat& q);
Integer ceil(const Rat& q);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Integer vector in a rank-r lattice. The tag keeps characters (weights) and
/// cocharacters (one-parameter subgroups) from being mixed up; they meet only
/// through `pairing`.
template <class Tag>
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : entries_(rank) {}
  explicit LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long long> init) {
    entries_.reserve(init.size());
    for (long long v : init) entries_.emplace_back(v);
  }

  static LatticeVector unit(std::size_t rank, std::size_t i, int sign = 1) {
    LatticeVector v(rank);
    v.entries_[i] = sign;
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  LatticeVector& operator*=(const Integer& m) {
    for (auto& e : entries_) e *= m;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }
  friend LatticeVector operator*(const Integer& m, LatticeVector a) { return a *= m; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ < b.entries_;
  }

  /// Comma separated entries, the same syntax the CLI accepts for --lambda.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += relgit::to_string(entries_[i]);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << '(' << v.to_string() << ')';
  }

private:
  void check_same_rank(const LatticeVector& o) const {
    if (o.size() != size()) throw InputError("lattice vectors of different rank");
  }

  std::vector<Integer> entries_;
};

struct WeightTag;
struct CocharacterTag;

/// Element of the character lattice Z^r (a torus weight).
using WeightVector = LatticeVector<WeightTag>;
/// One-parameter subgroup t -> (t^l1, ..., t^lr) of the split torus G_m^r.
using OnePS = LatticeVector<CocharacterTag>;

/// <lambda, w>. Throws InputError on rank mismatch.
Integer pairing(const OnePS& lambda, const WeightVector& w);

/// Parses "1,-2,3" into a OnePS. Whitespace around entries is ignored.
OnePS parse_one_ps(std::string_view text);

}  // namespace relgit
