#pragma once

// Sparse multivariate polynomials with big-integer coefficients over the
// commuting symbols a[i,j] and b[i].
//
// Canonical form:
//   * symbols are totally ordered by (kind, row, col) with every a before
//     every b;
//   * a monomial stores (symbol, exponent) pairs sorted by symbol, exponents
//     strictly positive;
//   * a polynomial stores monomial -> nonzero coefficient, sorted in
//     descending lexicographic order of exponent vectors (the monomial with
//     the larger exponent on the first differing symbol comes first).
// Two polynomials are equal iff their term maps are identical, and
// to_string() is a pure function of that map.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cramer/errors.hpp"
#include "cramer/rational.hpp"

namespace cramer {

struct Symbol {
  enum class Kind : std::uint8_t { A = 0, B = 1 };

  Kind kind = Kind::A;
  int row = 1;
  int col = 0;  // always 0 for kind B

  static Symbol a(int row, int col) {
    if (row < 1 || col < 1) throw InvalidArgument("a[i,j] indices must be positive");
    return {Kind::A, row, col};
  }
  static Symbol b(int row) {
    if (row < 1) throw InvalidArgument("b[i] index must be positive");
    return {Kind::B, row, 0};
  }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

  std::string to_string() const {
    if (kind == Kind::A) return "a[" + std::to_string(row) + "," + std::to_string(col) + "]";
    return "b[" + std::to_string(row) + "]";
  }
};

/// A power product of symbols, kept sorted by symbol with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exponent = 1) {
    if (exponent > 0) factors_.emplace_back(s, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned exponent_of(const Symbol& s) const {
    for (const auto& [sym, e] : factors_) {
      if (sym == s) return e;
    }
    return 0;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
      if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out.factors_.insert(out.factors_.end(), i, x.factors_.end());
    out.factors_.insert(out.factors_.end(), j, y.factors_.end());
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order on dense exponent vectors (symbols in canonical
  /// order). Greater means a larger exponent on the first differing symbol.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    for (; i != x.factors_.end() && j != y.factors_.end(); ++i, ++j) {
      if (i->first != j->first) {
        // The smaller symbol has a positive exponent on one side and zero on
        // the other.
        return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      if (i->second != j->second) return i->second <=> j->second;
    }
    if (i != x.factors_.end()) return std::strong_ordering::greater;
    if (j != y.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  /// "a[1,1]*a[2,2]^2*b[1]"; "1" for the empty monomial.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [sym, e] : factors_) {
      if (!out.empty()) out += '*';
      out += sym.to_string();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, std::greater<>>;

  Polynomial() = default;
  Polynomial(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
  }
  Polynomial(int constant) : Polynomial(static_cast<long>(constant)) {}  // NOLINT
  explicit Polynomial(const Symbol& s) { terms_.emplace(Monomial(s), BigInt(1)); }
  Polynomial(const Monomial& m, const BigInt& coefficient) {
    if (coefficient != 0) terms_.emplace(m, coefficient);
  }

  static Polynomial a(int row, int col) { return Polynomial(Symbol::a(row, col)); }
  static Polynomial b(int row) { return Polynomial(Symbol::b(row)); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
    }
    return out;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  /// Terms in canonical order joined by " + " / " - "; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = sgn(c) < 0;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const BigInt magnitude = abs(c);
      if (m.is_one()) {
        out += magnitude.get_str();
      } else {
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += m.to_string();
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_negate(const Polynomial& p) { return -p; }

using Assignment = std::map<Symbol, Rational>;

/// Substitutes rationals for every symbol. Throws InvalidArgument when a
/// symbol occurring in p is missing from the assignment.
inline Rational evaluate(const Polynomial& p, const Assignment& assignment) {
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    Rational term{c};
    for (const auto& [sym, e] : m.factors()) {
      const auto it = assignment.find(sym);
      if (it == assignment.end()) {
        throw InvalidArgument("assignment has no value for " + sym.to_string());
      }
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial result;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      skip_space();
      Polynomial term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = parse_factor();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') return term;
      ++pos_;
      skip_space();
      term *= parse_factor();
    }
  }

  Polynomial parse_factor() {
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial(Monomial{}, BigInt(std::string(text_.substr(start, pos_ - start)), 10));
    }
    Symbol s;
    if (c == 'a') {
      ++pos_;
      expect('[');
      const int row = parse_index();
      expect(',');
      const int col = parse_index();
      expect(']');
      s = Symbol::a(row, col);
    } else if (c == 'b') {
      ++pos_;
      expect('[');
      const int row = parse_index();
      expect(']');
      s = Symbol::b(row);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    unsigned exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = static_cast<unsigned>(parse_index());
    }
    return Polynomial(Monomial(s, exponent), BigInt(1));
  }

  int parse_index() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small positive integer");
    const int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v < 1) fail("index must be positive");
    skip_space();
    return v;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of Polynomial::to_string. Also accepts non-canonical input such as
/// "b[1]*a[2,2] + 3 - a[1,1]^2"; the result is canonical.
inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolynomialParser(text).parse();
}

}  // namespace cramer
