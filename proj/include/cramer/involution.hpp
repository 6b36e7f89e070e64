#pragma once

// Mechanical check of the combinatorial proof of Cramer's rule.
//
// F_n = {[j, pi] : 1 <= j <= n, pi in S_n} carries, for each row i, the weight
// W_i([j, pi]) = a(i,j) * w_j(pi), and sum_{F_n} W_i is the left side of
// sum_j a(i,j) X_j = b(i) X_0. An element is i-good when pi_j = i. The good
// elements sum to b(i) X_0 term by term; the bad ones cancel in pairs under
// T_i, which swaps the values at positions j and j' = pi^{-1}(i).

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cramer/cramer.hpp"
#include "cramer/errors.hpp"
#include "cramer/perm.hpp"
#include "cramer/system.hpp"

namespace cramer {

/// An element [j, pi] of F_n.
struct FElement {
  int j;
  Permutation p;

  FElement(int j_, Permutation p_) : j(j_), p(std::move(p_)) {
    if (j < 1 || j > p.size()) throw InvalidArgument("F_n element position outside 1..n");
  }

  friend bool operator==(const FElement&, const FElement&) = default;
  /// Lexicographic on (j, permutation values).
  friend auto operator<=>(const FElement&, const FElement&) = default;

  std::string to_string() const { return "[" + std::to_string(j) + "," + p.to_string() + "]"; }
};

enum class Guy { Good, Bad };

/// Good iff pi_j = i.
inline Guy classify(int i, const FElement& e) { return e.p[e.j] == i ? Guy::Good : Guy::Bad; }

/// W_i([j, pi]) = a(i,j) * w_j(pi).
template <Scalar T>
T weight_W(const LinearSystem<T>& sys, int i, const FElement& e) {
  detail::check_index(i, 1, sys.size(), "i");
  return sys.a(i, e.j) * weight_wj(sys, e.j, e.p);
}

/// T_i([j, pi]) = [j', sigma] with j' = pi^{-1}(i) and sigma = pi with the
/// entries at j and j' swapped. Only defined on i-bad elements.
inline FElement t_involution(int i, const FElement& e) {
  detail::check_index(i, 1, e.p.size(), "i");
  if (classify(i, e) == Guy::Good) {
    throw InvalidArgument("T_i is undefined on the i-good element " + e.to_string());
  }
  const int j2 = position_of(e.p, i);
  return FElement(j2, transpose_positions(e.p, e.j, j2));
}

/// Calls f(e) for every element of F_n, ordered by (j, pi).
template <class F>
void for_each_f_element(int n, int max_n, F&& f) {
  check_guard(n, max_n);
  for (int j = 1; j <= n; ++j) {
    for (const Permutation& p : enumerate_permutations(n, max_n)) f(FElement(j, p));
  }
}

template <Scalar T>
struct Fact1Report {
  int i = 0;
  std::size_t good_count = 0;
  bool elementwise = true;  // W_i(e) = b(i) * w_0(pi) for every good e
  T good_sum;               // W_i(G_{n,i})
  T b_i_times_x0;           // b(i) * X_0
  std::string first_failure;

  bool aggregate() const { return good_sum == b_i_times_x0; }
  bool holds() const { return elementwise && aggregate(); }
};

/// W_i(G_{n,i}) = b(i) X_0, checked per element and in aggregate.
template <Scalar T>
Fact1Report<T> check_fact1(const LinearSystem<T>& sys, int i, int max_n = kDefaultMaxN) {
  detail::check_index(i, 1, sys.size(), "i");
  Fact1Report<T> r;
  r.i = i;
  for_each_f_element(sys.size(), max_n, [&](const FElement& e) {
    if (classify(i, e) != Guy::Good) return;
    ++r.good_count;
    const T w = weight_W(sys, i, e);
    if (r.elementwise && w != sys.b(i) * weight_w0(sys, e.p)) {
      r.elementwise = false;
      r.first_failure = "W_i" + e.to_string() + " != b_i * w_0";
    }
    r.good_sum += w;
  });
  r.b_i_times_x0 = sys.b(i) * big_x(sys, 0, max_n);
  return r;
}

template <Scalar T>
struct Fact2Report {
  int i = 0;
  std::size_t bad_count = 0;
  bool image_is_bad = true;     // T_i(e) is i-bad
  bool no_fixed_points = true;  // T_i(e) != e
  bool self_inverse = true;     // T_i(T_i(e)) = e
  bool odd_parity = true;       // inv(pi) - inv(sigma) odd
  bool pairwise_cancel = true;  // W_i(e) + W_i(T_i(e)) = 0
  T bad_sum;                    // W_i(B_{n,i})
  std::string first_failure;

  bool aggregate() const { return bad_sum.is_zero(); }
  bool holds() const {
    return image_is_bad && no_fixed_points && self_inverse && odd_parity && pairwise_cancel &&
           aggregate();
  }
};

/// W_i(B_{n,i}) = 0, checked in aggregate and pair by pair, together with the
/// involution properties of T_i. The fixed-point check runs before the
/// cancellation check for each element.
template <Scalar T>
Fact2Report<T> check_fact2(const LinearSystem<T>& sys, int i, int max_n = kDefaultMaxN) {
  detail::check_index(i, 1, sys.size(), "i");
  Fact2Report<T> r;
  r.i = i;
  auto fail = [&r](bool& flag, const std::string& why) {
    flag = false;
    if (r.first_failure.empty()) r.first_failure = why;
  };
  for_each_f_element(sys.size(), max_n, [&](const FElement& e) {
    if (classify(i, e) != Guy::Bad) return;
    ++r.bad_count;
    const T w = weight_W(sys, i, e);
    r.bad_sum += w;

    const FElement t = t_involution(i, e);
    if (t == e) {
      fail(r.no_fixed_points, "T_i fixes " + e.to_string());
      return;
    }
    if (classify(i, t) != Guy::Bad) {
      fail(r.image_is_bad, "T_i" + e.to_string() + " is good");
      return;
    }
    if (t_involution(i, t) != e) fail(r.self_inverse, "T_i(T_i" + e.to_string() + ") != itself");
    if ((inversions(e.p) - inversions(t.p)) % 2 == 0) {
      fail(r.odd_parity, "even inversion difference at " + e.to_string());
    }
    if (!(w + weight_W(sys, i, t)).is_zero()) {
      fail(r.pairwise_cancel, "W_i" + e.to_string() + " + W_i" + t.to_string() + " != 0");
    }
  });
  return r;
}

struct GoodEntry {
  FElement element;
  std::string weight;

  friend bool operator==(const GoodEntry&, const GoodEntry&) = default;
};

struct BadPair {
  FElement first;   // lexicographically smaller element
  FElement second;  // T_i(first)
  std::string weight;
  std::string weight2;

  friend bool operator==(const BadPair&, const BadPair&) = default;
};

/// Witness of both facts for one row i of a symbolic system.
struct PairingCertificate {
  int n = 0;
  int i = 0;
  std::vector<GoodEntry> good;
  std::vector<BadPair> bad_pairs;
  std::string fact1_sum;
  std::string b_i_times_X0;
  std::string fact2_sum;

  friend bool operator==(const PairingCertificate&, const PairingCertificate&) = default;
};

/// Builds the certificate for row i. Good entries are ordered by (j, pi);
/// each bad pair appears once, smaller element first, ordered by that element.
inline PairingCertificate build_certificate(const SymbolicSystem& sys, int i,
                                            int max_n = kDefaultMaxN) {
  detail::check_index(i, 1, sys.size(), "i");
  PairingCertificate cert;
  cert.n = sys.size();
  cert.i = i;
  Polynomial good_sum;
  Polynomial bad_sum;
  for_each_f_element(sys.size(), max_n, [&](const FElement& e) {
    const Polynomial w = weight_W(sys, i, e);
    if (classify(i, e) == Guy::Good) {
      good_sum += w;
      cert.good.push_back({e, w.to_string()});
      return;
    }
    bad_sum += w;
    FElement t = t_involution(i, e);
    if (t == e) throw Error("T_i has a fixed point at " + e.to_string());
    if (e < t) cert.bad_pairs.push_back({e, t, w.to_string(), weight_W(sys, i, t).to_string()});
  });
  std::sort(cert.bad_pairs.begin(), cert.bad_pairs.end(),
            [](const BadPair& x, const BadPair& y) { return x.first < y.first; });
  cert.fact1_sum = good_sum.to_string();
  cert.b_i_times_X0 = (sys.b(i) * big_x(sys, 0, max_n)).to_string();
  cert.fact2_sum = bad_sum.to_string();
  return cert;
}

/// Re-checks every structural claim a certificate makes, from its serialized
/// content alone. Returns the violations found (empty when valid).
inline std::vector<std::string> validate_certificate(const PairingCertificate& cert) {
  std::vector<std::string> problems;
  const int n = cert.n;
  if (n < 1 || n > 20 || cert.i < 1 || cert.i > n) {
    problems.emplace_back("n or i out of range");
    return problems;
  }
  const std::uint64_t total = static_cast<std::uint64_t>(n) * factorial(n);
  if (cert.good.size() + 2 * cert.bad_pairs.size() != total) {
    problems.emplace_back("|good| + 2|pairs| != n*n!");
  }
  if (cert.good.size() != factorial(n)) problems.emplace_back("|good| != n!");

  try {
    Polynomial good_sum;
    for (const auto& g : cert.good) {
      if (g.element.p.size() != n) problems.emplace_back("wrong permutation size");
      if (classify(cert.i, g.element) != Guy::Good) {
        problems.emplace_back("listed good element " + g.element.to_string() + " is bad");
      }
      good_sum += parse_polynomial(g.weight);
    }
    Polynomial bad_sum;
    for (const auto& pr : cert.bad_pairs) {
      if (pr.first.p.size() != n || pr.second.p.size() != n) {
        problems.emplace_back("wrong permutation size");
        continue;
      }
      if (!(pr.first < pr.second)) problems.emplace_back("pair not ordered");
      if (classify(cert.i, pr.first) != Guy::Bad || t_involution(cert.i, pr.first) != pr.second) {
        problems.emplace_back("pair " + pr.first.to_string() + " is not (e, T_i(e))");
      }
      const Polynomial w = parse_polynomial(pr.weight);
      const Polynomial w2 = parse_polynomial(pr.weight2);
      if (w != -w2) problems.emplace_back("pair weights of " + pr.first.to_string() + " do not cancel");
      bad_sum += w + w2;
    }
    if (cert.fact2_sum != "0") problems.emplace_back("fact2_sum is not \"0\"");
    if (cert.fact1_sum != cert.b_i_times_X0) problems.emplace_back("fact1_sum != b_i_times_X0");
    if (good_sum.to_string() != cert.fact1_sum) problems.emplace_back("good weights do not sum to fact1_sum");
    if (!bad_sum.is_zero()) problems.emplace_back("bad weights do not sum to zero");
  } catch (const Error& e) {
    problems.emplace_back(e.what());
  }
  return problems;
}

// JSON schema:
// { "n", "i", "good": [{"j", "pi", "weight"}],
//   "bad_pairs": [{"j", "pi", "j2", "sigma", "weight", "weight2"}],
//   "fact1_sum", "b_i_times_X0", "fact2_sum" }

inline nlohmann::json permutation_to_json(const Permutation& p) {
  return nlohmann::json(std::vector<int>(p.values().begin(), p.values().end()));
}

inline Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const PairingCertificate& c) {
  nlohmann::json good = nlohmann::json::array();
  for (const auto& g : c.good) {
    good.push_back({{"j", g.element.j}, {"pi", permutation_to_json(g.element.p)}, {"weight", g.weight}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& b : c.bad_pairs) {
    pairs.push_back({{"j", b.first.j},
                     {"pi", permutation_to_json(b.first.p)},
                     {"j2", b.second.j},
                     {"sigma", permutation_to_json(b.second.p)},
                     {"weight", b.weight},
                     {"weight2", b.weight2}});
  }
  nlohmann::json out;
  out["n"] = c.n;
  out["i"] = c.i;
  out["good"] = std::move(good);
  out["bad_pairs"] = std::move(pairs);
  out["fact1_sum"] = c.fact1_sum;
  out["b_i_times_X0"] = c.b_i_times_X0;
  out["fact2_sum"] = c.fact2_sum;
  return out;
}

/// Throws ParseError on schema violations.
inline PairingCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    PairingCertificate c;
    c.n = j.at("n").get<int>();
    c.i = j.at("i").get<int>();
    for (const auto& g : j.at("good")) {
      c.good.push_back({FElement(g.at("j").get<int>(), permutation_from_json(g.at("pi"))),
                        g.at("weight").get<std::string>()});
    }
    for (const auto& b : j.at("bad_pairs")) {
      c.bad_pairs.push_back({FElement(b.at("j").get<int>(), permutation_from_json(b.at("pi"))),
                             FElement(b.at("j2").get<int>(), permutation_from_json(b.at("sigma"))),
                             b.at("weight").get<std::string>(), b.at("weight2").get<std::string>()});
    }
    c.fact1_sum = j.at("fact1_sum").get<std::string>();
    c.b_i_times_X0 = j.at("b_i_times_X0").get<std::string>();
    c.fact2_sum = j.at("fact2_sum").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace cramer
