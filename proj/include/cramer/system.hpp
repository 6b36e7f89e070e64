#pragma once

#include <concepts>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cramer/errors.hpp"
#include "cramer/polynomial.hpp"
#include "cramer/rational.hpp"

namespace cramer {

/// Exact scalars the solver works over: Rational (numeric mode) or
/// Polynomial (symbolic mode).
template <class T>
concept Scalar = std::regular<T> && requires(T x, const T& y) {
  { x += y } -> std::same_as<T&>;
  { x -= y } -> std::same_as<T&>;
  { y * y } -> std::same_as<T>;
  { -y } -> std::same_as<T>;
  { y.is_zero() } -> std::same_as<bool>;
  { y.to_string() } -> std::same_as<std::string>;
  T(1);
};

/// The n equations sum_j a(i,j) x_j = b(i). Indices are 1-based.
template <Scalar T>
class LinearSystem {
 public:
  using scalar_type = T;

  LinearSystem(std::vector<std::vector<T>> matrix, std::vector<T> rhs)
      : n_(static_cast<int>(matrix.size())), rhs_(std::move(rhs)) {
    if (n_ < 1) throw InvalidArgument("system must have n >= 1");
    if (static_cast<int>(rhs_.size()) != n_) {
      throw InvalidArgument("right-hand side has " + std::to_string(rhs_.size()) +
                            " entries, expected " + std::to_string(n_));
    }
    entries_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (auto& row : matrix) {
      if (static_cast<int>(row.size()) != n_) throw InvalidArgument("matrix is not square");
      for (auto& v : row) entries_.push_back(std::move(v));
    }
  }

  int size() const { return n_; }

  const T& a(int row, int col) const {
    return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
  }
  const T& b(int row) const { return rhs_[static_cast<std::size_t>(row - 1)]; }

  std::vector<std::vector<T>> matrix() const {
    std::vector<std::vector<T>> out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back(a(i, j));
    }
    return out;
  }
  const std::vector<T>& rhs() const { return rhs_; }

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  int n_;
  std::vector<T> entries_;  // row-major
  std::vector<T> rhs_;
};

using NumericSystem = LinearSystem<Rational>;
using SymbolicSystem = LinearSystem<Polynomial>;

/// Entry (i,j) is the symbol a[i,j] and rhs i is b[i].
inline SymbolicSystem generic_system(int n) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(n));
  std::vector<Polynomial> rhs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(i - 1)].push_back(Polynomial::a(i, j));
    rhs.push_back(Polynomial::b(i));
  }
  return SymbolicSystem(std::move(m), std::move(rhs));
}

/// The assignment a[i,j] -> sys.a(i,j), b[i] -> sys.b(i).
inline Assignment assignment_of(const NumericSystem& sys) {
  Assignment out;
  for (int i = 1; i <= sys.size(); ++i) {
    for (int j = 1; j <= sys.size(); ++j) out.emplace(Symbol::a(i, j), sys.a(i, j));
    out.emplace(Symbol::b(i), sys.b(i));
  }
  return out;
}

/// Evaluates every entry of a symbolic system under `assignment`.
inline NumericSystem instantiate(const SymbolicSystem& sys, const Assignment& assignment) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(sys.size()));
  std::vector<Rational> rhs;
  for (int i = 1; i <= sys.size(); ++i) {
    for (int j = 1; j <= sys.size(); ++j) {
      m[static_cast<std::size_t>(i - 1)].push_back(evaluate(sys.a(i, j), assignment));
    }
    rhs.push_back(evaluate(sys.b(i), assignment));
  }
  return NumericSystem(std::move(m), std::move(rhs));
}

}  // namespace cramer
