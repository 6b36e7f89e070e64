#pragma once

// Cramer's rule as signed sums over S_n.
//
//   w_0(pi) = sign(pi) * prod_k a(pi_k, k)
//   w_j(pi) = sign(pi) * b(pi_j) * prod_{k != j} a(pi_k, k)
//   X_j     = sum_{pi in S_n} w_j(pi),   x_j = X_j / X_0
//
// Note the index order a(pi_k, k): row pi_k, column k. The sum for X_0 is
// det(A^T), which equals det(A).

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "cramer/errors.hpp"
#include "cramer/perm.hpp"
#include "cramer/system.hpp"

namespace cramer {

namespace detail {

template <Scalar T>
void check_same_size(const LinearSystem<T>& sys, const Permutation& p) {
  if (p.size() != sys.size()) {
    throw InvalidArgument("permutation size " + std::to_string(p.size()) +
                          " does not match system size " + std::to_string(sys.size()));
  }
}

inline void check_index(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi) {
    throw InvalidArgument(std::string(name) + " = " + std::to_string(value) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(hi));
  }
}

/// Factor contributed by position k of pi to w_j (j = 0 means w_0).
template <Scalar T>
const T& weight_factor(const LinearSystem<T>& sys, int j, const Permutation& p, int k) {
  return k == j ? sys.b(p[k]) : sys.a(p[k], k);
}

}  // namespace detail

/// w_0(pi) = sign(pi) * prod_{k=1..n} a(pi_k, k).
template <Scalar T>
T weight_w0(const LinearSystem<T>& sys, const Permutation& p) {
  detail::check_same_size(sys, p);
  T product(1);
  for (int k = 1; k <= p.size(); ++k) product = product * sys.a(p[k], k);
  return sign(p) < 0 ? -product : product;
}

/// w_j(pi) = sign(pi) * b(pi_j) * prod_{k != j} a(pi_k, k), 1 <= j <= n.
template <Scalar T>
T weight_wj(const LinearSystem<T>& sys, int j, const Permutation& p) {
  detail::check_index(j, 1, sys.size(), "j");
  detail::check_same_size(sys, p);
  T product = sys.b(p[j]);
  for (int k = 1; k <= p.size(); ++k) {
    if (k != j) product = product * sys.a(p[k], k);
  }
  return sign(p) < 0 ? -product : product;
}

/// Sum of w_j over the lexicographic ranks [first_rank, last_rank) of S_n.
///
/// Streams the enumeration and keeps prefix products of the weight factors;
/// after each step only the factors from the first changed position onwards
/// are recomputed.
template <Scalar T>
T partial_big_x(const LinearSystem<T>& sys, int j, std::uint64_t first_rank,
                std::uint64_t last_rank, int max_n = kDefaultMaxN) {
  const int n = sys.size();
  detail::check_index(j, 0, n, "j");
  PermutationEnumerator perms(n, first_rank, last_rank, max_n);
  T total;
  std::vector<T> prefix(static_cast<std::size_t>(n) + 1, T(1));
  int changed = 1;
  for (; !perms.done(); changed = perms.advance()) {
    const Permutation& p = perms.current();
    for (int k = changed; k <= n; ++k) {
      prefix[static_cast<std::size_t>(k)] =
          prefix[static_cast<std::size_t>(k - 1)] * detail::weight_factor(sys, j, p, k);
    }
    if (sign(p) < 0) {
      total -= prefix[static_cast<std::size_t>(n)];
    } else {
      total += prefix[static_cast<std::size_t>(n)];
    }
  }
  return total;
}

/// X_j = w_j(S_n) for 0 <= j <= n (j = 0 gives the determinant).
template <Scalar T>
T big_x(const LinearSystem<T>& sys, int j, int max_n = kDefaultMaxN) {
  check_guard(sys.size(), max_n);
  return partial_big_x(sys, j, 0, factorial(sys.size()), max_n);
}

/// X_j computed as `workers` partial sums over contiguous rank ranges, added
/// in rank order. Equal to big_x because the arithmetic is exact.
template <Scalar T>
T parallel_big_x(const LinearSystem<T>& sys, int j, unsigned workers,
                 int max_n = kDefaultMaxN) {
  check_guard(sys.size(), max_n);
  detail::check_index(j, 0, sys.size(), "j");
  const std::uint64_t total = factorial(sys.size());
  workers = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(workers, total)));
  std::vector<T> partials(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { partials[w] = partial_big_x(sys, j, lo, hi, max_n); });
    }
  }
  T sum;
  for (const auto& part : partials) sum += part;
  return sum;
}

template <Scalar T>
struct QuotientOf {
  using type = std::pair<T, T>;  // (X_j, X_0), unreduced
};
template <>
struct QuotientOf<Rational> {
  using type = Rational;
};

template <Scalar T>
struct Solution {
  std::vector<T> numerators;  // X_1..X_n
  T denominator;              // X_0
  std::vector<typename QuotientOf<T>::type> quotients;
};

/// Cramer's rule. Throws SingularSystem when X_0 is zero. Before returning,
/// checks that the result satisfies every equation exactly (numeric mode:
/// residuals of the quotients; symbolic mode: sum_j a(i,j) X_j = b(i) X_0).
template <Scalar T>
Solution<T> solve(const LinearSystem<T>& sys, int max_n = kDefaultMaxN) {
  const int n = sys.size();
  check_guard(n, max_n);
  Solution<T> out;
  out.denominator = big_x(sys, 0, max_n);
  if (out.denominator.is_zero()) throw SingularSystem();
  for (int j = 1; j <= n; ++j) out.numerators.push_back(big_x(sys, j, max_n));

  if constexpr (std::is_same_v<T, Rational>) {
    for (const auto& xj : out.numerators) out.quotients.push_back(xj / out.denominator);
    for (int i = 1; i <= n; ++i) {
      Rational lhs;
      for (int j = 1; j <= n; ++j) lhs += sys.a(i, j) * out.quotients[static_cast<std::size_t>(j - 1)];
      if (lhs != sys.b(i)) throw Error("internal error: nonzero residual in equation " + std::to_string(i));
    }
  } else {
    for (const auto& xj : out.numerators) out.quotients.emplace_back(xj, out.denominator);
    for (int i = 1; i <= n; ++i) {
      T lhs;
      for (int j = 1; j <= n; ++j) lhs += sys.a(i, j) * out.numerators[static_cast<std::size_t>(j - 1)];
      if (lhs != sys.b(i) * out.denominator) {
        throw Error("internal error: identity fails for equation " + std::to_string(i));
      }
    }
  }
  return out;
}

template <Scalar T>
struct IdentityReport {
  int i = 0;
  bool holds = false;
  T lhs;  // sum_j a(i,j) X_j
  T rhs;  // b(i) X_0
};

/// Checks sum_{j=1..n} a(i,j) X_j = b(i) X_0 by exact canonical comparison.
template <Scalar T>
IdentityReport<T> verify_identity(const LinearSystem<T>& sys, int i, int max_n = kDefaultMaxN) {
  detail::check_index(i, 1, sys.size(), "i");
  check_guard(sys.size(), max_n);
  IdentityReport<T> report;
  report.i = i;
  for (int j = 1; j <= sys.size(); ++j) report.lhs += sys.a(i, j) * big_x(sys, j, max_n);
  report.rhs = sys.b(i) * big_x(sys, 0, max_n);
  report.holds = report.lhs == report.rhs;
  return report;
}

/// Same as verify_identity but reuses precomputed X_0..X_n.
template <Scalar T>
IdentityReport<T> verify_identity(const LinearSystem<T>& sys, int i, const std::vector<T>& xs) {
  detail::check_index(i, 1, sys.size(), "i");
  if (static_cast<int>(xs.size()) != sys.size() + 1) throw InvalidArgument("need X_0..X_n");
  IdentityReport<T> report;
  report.i = i;
  for (int j = 1; j <= sys.size(); ++j) report.lhs += sys.a(i, j) * xs[static_cast<std::size_t>(j)];
  report.rhs = sys.b(i) * xs[0];
  report.holds = report.lhs == report.rhs;
  return report;
}

/// X_0..X_n in one vector.
template <Scalar T>
std::vector<T> all_big_x(const LinearSystem<T>& sys, int max_n = kDefaultMaxN) {
  std::vector<T> xs;
  for (int j = 0; j <= sys.size(); ++j) xs.push_back(big_x(sys, j, max_n));
  return xs;
}

}  // namespace cramer
