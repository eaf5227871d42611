#include "relgit/exact.hpp"

#include <cctype>

namespace relgit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
    throw InputError("not a rational number: '" + std::string(text) + "'");
  Integer p = parse_integer(num);
  Integer q = den.empty() ? Integer(1) : parse_integer(den);
  if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rat(p, q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer floor(const Rat& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rat& q) { return -floor(-q); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer pairing(const OnePS& lambda, const WeightVector& w) {
  if (lambda.size() != w.size())
    throw InputError("rank mismatch: one-parameter subgroup has " + std::to_string(lambda.size()) +
                     " entries, weight has " + std::to_string(w.size()));
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += lambda[i] * w[i];
  return s;
}

OnePS parse_one_ps(std::string_view text) {
  std::vector<Integer> entries;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    if (!is_integer_literal(item))
      throw InputError("bad one-parameter subgroup '" + std::string(text) +
                       "': expected comma-separated integers");
    entries.push_back(parse_integer(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return OnePS(std::move(entries));
}

}  // namespace relgit
