#include "relgit/polynomial.hpp"

#include <cctype>

namespace relgit {

Polynomial::Polynomial(std::vector<Term> terms) {
  std::map<Exponents, Rat> merged;
  for (auto& t : terms) {
    for (auto it = t.exponents.begin(); it != t.exponents.end();)
      it = it->second == 0 ? t.exponents.erase(it) : std::next(it);
    merged[t.exponents] += t.coefficient;
  }
  for (auto& [e, c] : merged)
    if (c != 0) terms_.push_back({c, e});
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return Polynomial(std::move(terms));
  }

private:
  Term term() {
    Term t{Rat(1), {}};
    factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      factor(t);
      skip_ws();
    }
    return t;
  }

  void factor(Term& t) {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        num += '/' + digits();
      }
      t.coefficient *= parse_rat(num);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::string name;
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += text_[pos_++];
      unsigned exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exp = static_cast<unsigned>(std::stoul(digits()));
      }
      t.exponents[name] += exp;
      return;
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += text_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial syntax error at position " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

Rat Polynomial::evaluate(const std::map<std::string, Rat>& values) const {
  Rat sum = 0;
  for (const auto& t : terms_) {
    Rat v = t.coefficient;
    for (const auto& [name, e] : t.exponents) {
      auto it = values.find(name);
      if (it == values.end()) throw InputError("no value for variable '" + name + "'");
      for (unsigned k = 0; k < e; ++k) v *= it->second;
    }
    sum += v;
  }
  return sum;
}

std::string monomial_to_string(const Exponents& e) {
  std::string out;
  for (const auto& [name, k] : e) {
    if (!out.empty()) out += '*';
    out += name;
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rat c = t.coefficient;
    if (c < 0) {
      out += i ? " - " : "-";
      c = -c;
    } else if (i) {
      out += " + ";
    }
    if (t.exponents.empty()) {
      out += relgit::to_string(c);
    } else {
      if (c != 1) out += relgit::to_string(c) + "*";
      out += monomial_to_string(t.exponents);
    }
  }
  return out;
}

}  // namespace relgit
