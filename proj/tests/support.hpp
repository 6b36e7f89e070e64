#pragma once

// Random generators and brute-force helpers shared by the test suites. None of
// these call into the code paths they are used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cramer/all.hpp"

namespace cramer::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -9, int hi = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline NumericSystem random_integer_system(Rng& rng, int n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
  std::vector<Rational> b;
  for (auto& row : m) {
    for (int j = 0; j < n; ++j) row.emplace_back(d(rng));
    b.emplace_back(d(rng));
  }
  return NumericSystem(std::move(m), std::move(b));
}

inline NumericSystem random_rational_system(Rng& rng, int n) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
  std::vector<Rational> b;
  for (auto& row : m) {
    for (int j = 0; j < n; ++j) row.push_back(random_rational(rng));
    b.push_back(random_rational(rng));
  }
  return NumericSystem(std::move(m), std::move(b));
}

/// Symbols drawn from a[1..2,1..2] and b[1..2].
inline Symbol random_symbol(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> idx(1, 2);
  const int k = kind(rng);
  if (k < 4) return Symbol::a(idx(rng), idx(rng));
  return Symbol::b(idx(rng));
}

/// At most 5 terms, exponents at most 2, small coefficients.
inline Polynomial random_polynomial(Rng& rng) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> factors(0, 3);
  std::uniform_int_distribution<int> exponent(1, 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  Polynomial p;
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m;
    const int f = factors(rng);
    for (int q = 0; q < f; ++q) {
      const Monomial next = m * Monomial(random_symbol(rng), static_cast<unsigned>(exponent(rng)));
      // Keep every exponent <= 2.
      bool ok = true;
      for (const auto& [s, e] : next.factors()) ok = ok && e <= 2;
      if (ok) m = next;
    }
    p += Polynomial(m, BigInt(coef(rng)));
  }
  return p;
}

inline Assignment random_assignment(Rng& rng, int n = 2) {
  Assignment a;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a.emplace(Symbol::a(i, j), random_rational(rng));
    a.emplace(Symbol::b(i), random_rational(rng));
  }
  return a;
}

/// Brute-force inversion count, straight from the pair definition.
inline int brute_inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i < j && v[i] > v[j]) ++c;
    }
  }
  return c;
}

inline std::vector<int> values_of(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace cramer::testing
