#pragma once

// Independent oracles for the permutation-sum solver.
//
// cofactor_det expands det(A) along the first row in the usual orientation.
// It agrees with big_x(sys, 0) = sum_pi sign(pi) prod_k a(pi_k, k) = det(A^T)
// because the determinant is transpose-invariant; the differing index order
// is not a bug.

#include <string>
#include <utility>
#include <vector>

#include "cramer/errors.hpp"
#include "cramer/rational.hpp"
#include "cramer/system.hpp"

namespace cramer {

inline constexpr int kCofactorMaxN = 7;

namespace detail {

template <Scalar T>
T cofactor_expand(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const T term = m[0][c] * cofactor_expand(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Scales every row of [A | b] by the lcm of its denominators.
inline std::vector<std::vector<BigInt>> integral_augmented(const NumericSystem& sys) {
  const int n = sys.size();
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    BigInt scale = 1;
    for (int j = 1; j <= n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), sys.a(i, j).denominator().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), sys.b(i).denominator().get_mpz_t());
    auto& row = m[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
      row.push_back(sys.a(i, j).numerator() * (scale / sys.a(i, j).denominator()));
    }
    row.push_back(sys.b(i).numerator() * (scale / sys.b(i).denominator()));
  }
  return m;
}

struct BareissResult {
  std::vector<std::vector<BigInt>> m;  // upper-triangular augmented matrix
  bool singular = false;
  bool odd_swaps = false;
};

/// Fraction-free forward elimination with row pivoting on the first n columns.
/// Every division is exact.
inline BareissResult bareiss_eliminate(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BareissResult r;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) {
      r.singular = true;
      r.m = std::move(m);
      return r;
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      r.odd_swaps = !r.odd_swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  r.m = std::move(m);
  return r;
}

}  // namespace detail

/// det(A) by first-row cofactor expansion, for n <= 7.
template <Scalar T>
T cofactor_det(const LinearSystem<T>& sys, int max_n = kCofactorMaxN) {
  if (sys.size() > max_n) {
    throw GuardExceeded("cofactor expansion limited to n <= " + std::to_string(max_n));
  }
  return detail::cofactor_expand(sys.matrix());
}

/// det(A) by Bareiss elimination.
inline Rational bareiss_det(const NumericSystem& sys) {
  // Row scaling multiplies the determinant by the product of the scales.
  const int n = sys.size();
  BigInt scale_product = 1;
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    BigInt scale = 1;
    for (int j = 1; j <= n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), sys.a(i, j).denominator().get_mpz_t());
    scale_product *= scale;
    for (int j = 1; j <= n; ++j) {
      m[static_cast<std::size_t>(i - 1)].push_back(sys.a(i, j).numerator() * (scale / sys.a(i, j).denominator()));
    }
  }
  const auto r = detail::bareiss_eliminate(std::move(m));
  if (r.singular) return Rational(0);
  BigInt det = r.m.back().back();
  if (r.odd_swaps) det = -det;
  return Rational(det, scale_product);
}

/// Solves the system by Bareiss elimination followed by exact
/// back-substitution. Throws SingularSystem iff det(A) = 0.
inline std::vector<Rational> bareiss_solve(const NumericSystem& sys) {
  const auto n = static_cast<std::size_t>(sys.size());
  const auto r = detail::bareiss_eliminate(detail::integral_augmented(sys));
  if (r.singular) throw SingularSystem();
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(r.m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(r.m[k][j]) * x[j];
    x[k] = acc / Rational(r.m[k][k]);
  }
  return x;
}

}  // namespace cramer
