#pragma once

// Permutations of {1, ..., n} with 1-based positions and values.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cramer/errors.hpp"

namespace cramer {

/// Default ceiling on n for anything that enumerates S_n.
inline constexpr int kDefaultMaxN = 9;

inline void check_guard(int n, int max_n) {
  if (n < 1) throw InvalidArgument("n must be a positive integer, got " + std::to_string(n));
  if (n > max_n) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds max_n = " + std::to_string(max_n));
  }
}

/// n! for n <= 20.
inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

class PermutationEnumerator;

/// A bijective sequence pi_1 ... pi_n of {1, ..., n}. Immutable once built.
class Permutation {
 public:
  /// Validates and wraps `values`. Throws InvalidArgument on an empty sequence,
  /// an out-of-range value or a repeated value.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    if (n < 1) throw InvalidArgument("permutation must have at least one entry");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n) {
        throw InvalidArgument("permutation value " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("permutation value " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    check_guard(n, n);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
    return Permutation(std::move(v), Unchecked{});
  }

  int size() const { return static_cast<int>(values_.size()); }

  /// pi_k, 1-based.
  int operator[](int k) const { return values_[static_cast<std::size_t>(k - 1)]; }

  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

  /// Compact form for n <= 9 ("51423"), comma-separated otherwise.
  std::string to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!compact && k > 0) out += ',';
      out += std::to_string(values_[k]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
  }

 private:
  friend class PermutationEnumerator;
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  std::vector<int> values_;
};

/// Parses "51423"-style digit strings (n <= 9) into a permutation.
inline Permutation parse_permutation(std::string_view digits) {
  std::vector<int> v;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("bad permutation digit string");
    v.push_back(c - '0');
  }
  return Permutation(std::move(v));
}

inline Permutation make_permutation(std::vector<int> values) {
  return Permutation(std::move(values));
}

/// Number of pairs (i, j), i < j, with pi_i > pi_j. Direct pair scan.
inline int inversions(const Permutation& p) {
  const auto v = p.values();
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

/// The inversion pairs themselves, 1-based, in lexicographic order.
inline std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p[i] > p[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

/// (-1)^inversions(p).
inline int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? 1 : -1; }

/// The unique position k with pi_k = value.
inline int position_of(const Permutation& p, int value) {
  if (value < 1 || value > p.size()) {
    throw InvalidArgument("value " + std::to_string(value) + " outside 1.." +
                          std::to_string(p.size()));
  }
  const auto v = p.values();
  return static_cast<int>(std::find(v.begin(), v.end(), value) - v.begin()) + 1;
}

/// Copy of p with the entries at positions j and j2 swapped.
inline Permutation transpose_positions(const Permutation& p, int j, int j2) {
  const int n = p.size();
  if (j < 1 || j > n || j2 < 1 || j2 > n) throw InvalidArgument("position outside 1..n");
  if (j == j2) throw InvalidArgument("transposition needs two distinct positions");
  std::vector<int> v(p.values().begin(), p.values().end());
  std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j2 - 1)]);
  return Permutation(std::move(v));
}

/// The permutation of lexicographic rank `rank` (0-based) in S_n.
inline Permutation unrank_permutation(int n, std::uint64_t rank) {
  check_guard(n, 20);
  if (rank >= factorial(n)) throw InvalidArgument("rank outside 0..n!-1");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
  std::vector<int> out;
  out.reserve(pool.size());
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto idx = static_cast<std::ptrdiff_t>(rank / block);
    rank %= block;
    out.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(out));
}

/// Streams S_n (or a contiguous rank range of it) in lexicographic order.
///
/// Consumers must not rely on any order beyond "every element of the range
/// exactly once"; the lexicographic order is what makes output deterministic.
class PermutationEnumerator {
 public:
  explicit PermutationEnumerator(int n, int max_n = kDefaultMaxN)
      : PermutationEnumerator(n, 0, full_count(n, max_n), max_n) {}

  /// Ranks [first_rank, last_rank).
  PermutationEnumerator(int n, std::uint64_t first_rank, std::uint64_t last_rank,
                        int max_n = kDefaultMaxN)
      : current_(Permutation::identity((check_guard(n, max_n), n))),
        remaining_(last_rank > first_rank ? last_rank - first_rank : 0) {
    if (last_rank > factorial(n)) throw InvalidArgument("rank range exceeds n!");
    if (remaining_ > 0 && first_rank > 0) current_ = unrank_permutation(n, first_rank);
  }

  bool done() const { return remaining_ == 0; }
  const Permutation& current() const { return current_; }

  /// Moves to the next permutation and returns the first (1-based) position
  /// whose value changed. Positions before it are untouched.
  int advance() {
    if (remaining_ == 0) return 0;
    --remaining_;
    if (remaining_ == 0) return 1;
    auto& v = current_.values_;
    auto i = static_cast<std::ptrdiff_t>(v.size()) - 2;
    while (i >= 0 && v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i) + 1]) --i;
    // remaining_ > 0 guarantees a successor exists.
    auto j = static_cast<std::ptrdiff_t>(v.size()) - 1;
    while (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) --j;
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    std::reverse(v.begin() + i + 1, v.end());
    return static_cast<int>(i) + 1;
  }

 private:
  static std::uint64_t full_count(int n, int max_n) {
    check_guard(n, max_n);
    return factorial(n);
  }

  Permutation current_;
  std::uint64_t remaining_;
};

/// Input-iterator range over S_n, for range-for loops.
class PermutationRange {
 public:
  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using pointer = const Permutation*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(PermutationEnumerator* e) : e_(e) {}

    reference operator*() const { return e_->current(); }
    pointer operator->() const { return &e_->current(); }
    iterator& operator++() {
      e_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.e_ == nullptr || it.e_->done();
    }

   private:
    PermutationEnumerator* e_ = nullptr;
  };

  explicit PermutationRange(PermutationEnumerator e) : e_(std::move(e)) {}

  iterator begin() { return iterator(&e_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  PermutationEnumerator e_;
};

/// All n! permutations of {1..n}, lexicographic. Throws GuardExceeded when
/// n > max_n and InvalidArgument when n < 1.
inline PermutationRange enumerate_permutations(int n, int max_n = kDefaultMaxN) {
  return PermutationRange(PermutationEnumerator(n, max_n));
}

}  // namespace cramer
