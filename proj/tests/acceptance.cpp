// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cramer/all.hpp"
#include "support.hpp"

namespace {

using namespace cramer;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome inversion_fixture() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto p = make_permutation({5, 1, 4, 2, 3});
  const int inv = inversions(p);
  const auto set = inversion_set(p);
  const double elapsed = seconds_since(t0);
  o.require(inv == 6, "inv(51423) = " + std::to_string(inv));
  o.require(set == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 5}},
            "inversion set differs");
  o.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome enumeration_fixture() {
  Outcome o;
  std::vector<std::string> got;
  for (const auto& p : enumerate_permutations(3)) got.push_back(p.to_string());
  o.require(got == std::vector<std::string>{"123", "132", "213", "231", "312", "321"}, "S_3 differs");
  return o;
}

Outcome identity_all_rows() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto t0 = Clock::now();
    const auto g = generic_system(n);
    for (int i = 1; i <= n; ++i) {
      o.require(verify_identity(g, i).holds, "n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
    if (n == 6) o.require(seconds_since(t0) < 60.0, "n=6 took " + std::to_string(seconds_since(t0)) + " s");
  }
  return o;
}

Outcome fact1_elementwise() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const auto g = generic_system(n);
    const auto x0 = big_x(g, 0);
    for (int i = 1; i <= n; ++i) {
      const std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      Polynomial good_sum;
      for_each_f_element(n, kDefaultMaxN, [&](const FElement& e) {
        if (classify(i, e) != Guy::Good) return;
        const auto w = weight_W(g, i, e);
        o.require(w == g.b(i) * weight_w0(g, e.p), where + " element " + e.to_string());
        good_sum += w;
      });
      o.require(good_sum == g.b(i) * x0, where + " aggregate");
      o.require(check_fact1(g, i).holds(), where + " check_fact1");
    }
  }
  return o;
}

Outcome fact2_pairwise() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 1; n <= 5; ++n) {
    const auto g = generic_system(n);
    for (int i = 1; i <= n; ++i) {
      const std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      Polynomial bad_sum;
      for_each_f_element(n, kDefaultMaxN, [&](const FElement& e) {
        if (classify(i, e) != Guy::Bad) return;
        const FElement t = t_involution(i, e);
        o.require(classify(i, t) == Guy::Bad, where + " image good at " + e.to_string());
        o.require(t_involution(i, t) == e, where + " not self-inverse at " + e.to_string());
        o.require(t != e, where + " fixed point at " + e.to_string());
        o.require((inversions(e.p) - inversions(t.p)) % 2 != 0, where + " even parity at " + e.to_string());
        const auto w = weight_W(g, i, e);
        o.require((w + weight_W(g, i, t)).is_zero(), where + " no cancellation at " + e.to_string());
        bad_sum += w;
      });
      o.require(bad_sum.is_zero(), where + " aggregate nonzero");
      o.require(check_fact2(g, i).holds(), where + " check_fact2");
    }
  }
  o.require(seconds_since(t0) < 120.0, "took " + std::to_string(seconds_since(t0)) + " s");
  return o;
}

Outcome solve_matches_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  testing::Rng rng(20240818);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < 200; ++k) {
      NumericSystem sys = testing::random_integer_system(rng, n);
      while (bareiss_det(sys).is_zero()) sys = testing::random_integer_system(rng, n);
      const auto x = solve(sys).quotients;
      const auto y = bareiss_solve(sys);
      o.require(x == y, "n=" + std::to_string(n) + " sample " + std::to_string(k) + " differs");
      for (int i = 1; i <= n; ++i) {
        Rational lhs;
        for (int j = 1; j <= n; ++j) lhs += sys.a(i, j) * x[static_cast<std::size_t>(j - 1)];
        o.require(lhs == sys.b(i), "nonzero residual n=" + std::to_string(n));
      }
    }
  }
  o.require(seconds_since(t0) < 300.0, "took " + std::to_string(seconds_since(t0)) + " s");
  return o;
}

Outcome determinant_matches_oracle() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto g = generic_system(n);
    const auto x0 = big_x(g, 0);
    const std::string where = "generic n=" + std::to_string(n);
    o.require(x0 == cofactor_det(g), where + " differs from cofactor");
    o.require(x0.term_count() == factorial(n), where + " term count");
    for (const auto& [m, c] : x0.terms()) {
      o.require(c == 1 || c == -1, where + " coefficient");
      std::set<int> columns;
      for (const auto& [s, e] : m.factors()) {
        o.require(s.kind == Symbol::Kind::A && e == 1, where + " not multilinear");
        columns.insert(s.col);
      }
      o.require(static_cast<int>(columns.size()) == n && m.degree() == static_cast<unsigned>(n),
                where + " not one factor per column");
    }
  }
  testing::Rng rng(7);
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k < 100; ++k) {
      const auto sys = testing::random_integer_system(rng, n);
      o.require(big_x(sys, 0) == cofactor_det(sys), "numeric n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome certificate_integrity() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "cramer_acceptance";
  std::filesystem::create_directories(dir);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      const std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      const auto cert = build_certificate(generic_system(n), i);
      o.require(cert.good.size() + 2 * cert.bad_pairs.size() == static_cast<std::size_t>(n) * factorial(n),
                where + " |good| + 2|pairs|");
      o.require(cert.good.size() == factorial(n), where + " |good|");
      for (const auto& p : cert.bad_pairs) {
        o.require(parse_polynomial(p.weight) == -parse_polynomial(p.weight2), where + " pair weights");
      }
      o.require(cert.fact2_sum == "0", where + " fact2_sum");
      o.require(cert.fact1_sum == cert.b_i_times_X0, where + " fact1_sum");
      o.require(validate_certificate(cert).empty(), where + " validation");

      const auto path = dir / ("cert_" + std::to_string(n) + "_" + std::to_string(i) + ".json");
      std::ofstream(path) << to_json(cert).dump(2);
      std::ifstream in(path);
      const auto back = certificate_from_json(nlohmann::json::parse(in));
      o.require(back == cert, where + " file round trip");
    }
  }
  std::filesystem::remove_all(dir);
  return o;
}

Outcome algebra_homomorphism() {
  Outcome o;
  testing::Rng rng(1000);
  for (int k = 0; k < 1000; ++k) {
    const auto p = testing::random_polynomial(rng);
    const auto q = testing::random_polynomial(rng);
    const auto v = testing::random_assignment(rng);
    o.require(evaluate(poly_add(p, q), v) == rat_add(evaluate(p, v), evaluate(q, v)), "add at " + std::to_string(k));
    o.require(evaluate(poly_mul(p, q), v) == rat_mul(evaluate(p, v), evaluate(q, v)), "mul at " + std::to_string(k));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 inversion fixture 51423", inversion_fixture},
      {"AC2 enumeration fixture S_3", enumeration_fixture},
      {"AC3 identity for all i, n = 1..6", identity_all_rows},
      {"AC4 fact 1 elementwise, n <= 5", fact1_elementwise},
      {"AC5 fact 2 pairwise, n <= 5", fact2_pairwise},
      {"AC6 solve vs Bareiss, 200 systems per n = 2..8", solve_matches_oracle},
      {"AC7 Leibniz determinant vs cofactor", determinant_matches_oracle},
      {"AC8 certificate integrity, n <= 4", certificate_integrity},
      {"AC9 evaluation homomorphism, 1000 triples", algebra_homomorphism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(t0);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << std::fixed << std::setprecision(3)
              << elapsed << " s)";
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
