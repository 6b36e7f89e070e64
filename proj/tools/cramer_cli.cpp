// Command-line front end.
//
// Exit codes: 0 success, 1 a check failed (or I/O failure writing output),
// 2 parse/usage error, 3 singular system, 4 size guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cramer/all.hpp"

namespace {

using cramer::Mode;
using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitSingular = 3;
constexpr int kExitGuard = 4;

cramer::InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cramer::ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return cramer::parse_document_text(buf.str());
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_solve(const std::string& input, bool as_json, int max_n) {
  const auto doc = read_document(input);
  if (doc.mode == Mode::Rational) {
    const auto sol = cramer::solve(cramer::numeric_system(doc), max_n);
    if (as_json) {
      json j{{"mode", "rational"}, {"n", doc.n}, {"X0", sol.denominator.to_string()}};
      for (const auto& x : sol.numerators) j["X"].push_back(x.to_string());
      for (const auto& x : sol.quotients) j["x"].push_back(x.to_string());
      print_json(j);
    } else {
      std::string line;
      for (std::size_t k = 0; k < sol.quotients.size(); ++k) {
        if (k > 0) line += ", ";
        line += "x" + std::to_string(k + 1) + " = " + sol.quotients[k].to_string();
      }
      std::cout << line << "\n";
    }
    return 0;
  }
  const auto sol = cramer::solve(cramer::symbolic_system(doc), max_n);
  const std::string x0 = sol.denominator.to_string();
  if (as_json) {
    json j{{"mode", "symbolic"}, {"n", doc.n}, {"X0", x0}};
    for (const auto& x : sol.numerators) j["X"].push_back(x.to_string());
    for (const auto& [num, den] : sol.quotients) {
      j["x"].push_back({{"numerator", num.to_string()}, {"denominator", den.to_string()}});
    }
    print_json(j);
  } else {
    std::cout << "X0 = " << x0 << "\n";
    for (std::size_t k = 0; k < sol.quotients.size(); ++k) {
      std::cout << "x" << k + 1 << " = (" << sol.quotients[k].first << ") / (" << x0 << ")\n";
    }
  }
  return 0;
}

int run_verify_identity(int n, int only_i, bool as_json, int max_n) {
  cramer::check_guard(n, max_n);
  if (only_i != 0 && (only_i < 1 || only_i > n)) throw cramer::InvalidArgument("--i outside 1..n");
  const auto sys = cramer::generic_system(n);
  const auto xs = cramer::all_big_x(sys, max_n);
  bool all = true;
  json results = json::array();
  for (int i = 1; i <= n; ++i) {
    if (only_i != 0 && i != only_i) continue;
    const auto r = cramer::verify_identity(sys, i, xs);
    all = all && r.holds;
    if (as_json) {
      results.push_back({{"i", i}, {"pass", r.holds}, {"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}});
    } else {
      std::cout << "i=" << i << " " << verdict(r.holds) << "\n";
    }
  }
  if (as_json) print_json({{"n", n}, {"results", results}, {"pass", all}});
  return all ? 0 : kExitCheckFailed;
}

int run_check_involution(int n, int i, const std::string& certificate_path, bool as_json, int max_n) {
  cramer::check_guard(n, max_n);
  if (i < 1 || i > n) throw cramer::InvalidArgument("--i outside 1..n");
  const auto sys = cramer::generic_system(n);
  const auto f1 = cramer::check_fact1(sys, i, max_n);
  const auto f2 = cramer::check_fact2(sys, i, max_n);

  const std::vector<std::pair<std::string, bool>> checks = {
      {"fact1_elementwise", f1.elementwise},      {"fact1_aggregate", f1.aggregate()},
      {"involution_maps_bad_to_bad", f2.image_is_bad}, {"involution_self_inverse", f2.self_inverse},
      {"involution_fixed_point_free", f2.no_fixed_points}, {"parity_odd", f2.odd_parity},
      {"fact2_pairwise", f2.pairwise_cancel},     {"fact2_aggregate", f2.aggregate()},
  };
  bool all = f1.holds() && f2.holds();

  std::string written;
  if (!certificate_path.empty()) {
    const auto cert = cramer::build_certificate(sys, i, max_n);
    const auto problems = cramer::validate_certificate(cert);
    all = all && problems.empty();
    std::ofstream out(certificate_path);
    out << cramer::to_json(cert).dump(2) << "\n";
    out.close();
    if (!out) {
      std::cerr << "error: cannot write certificate to " << certificate_path << "\n";
      return kExitCheckFailed;
    }
    written = certificate_path;
  }

  const std::size_t pairs = f2.bad_count / 2;
  if (as_json) {
    json j{{"n", n}, {"i", i}, {"good", f1.good_count}, {"pairs", pairs}, {"pass", all}};
    for (const auto& [name, ok] : checks) j["checks"][name] = ok;
    if (!written.empty()) j["certificate"] = written;
    if (!f1.first_failure.empty()) j["fact1_failure"] = f1.first_failure;
    if (!f2.first_failure.empty()) j["fact2_failure"] = f2.first_failure;
    print_json(j);
  } else {
    for (const auto& [name, ok] : checks) std::cout << name << " " << verdict(ok) << "\n";
    if (!f1.first_failure.empty()) std::cout << "fact1 failure: " << f1.first_failure << "\n";
    if (!f2.first_failure.empty()) std::cout << "fact2 failure: " << f2.first_failure << "\n";
    std::cout << "good=" << f1.good_count << " pairs=" << pairs << "\n";
    if (!written.empty()) std::cout << "certificate=" << written << "\n";
    std::cout << verdict(all) << "\n";
  }
  return all ? 0 : kExitCheckFailed;
}

template <cramer::Scalar T>
int report_determinants(const std::vector<std::pair<std::string, T>>& results, bool as_json) {
  bool agree = true;
  for (const auto& [name, value] : results) agree = agree && value == results.front().second;
  if (as_json) {
    json j{{"agree", agree}};
    for (const auto& [name, value] : results) j["methods"][name] = value.to_string();
    if (agree) j["det"] = results.front().second.to_string();
    print_json(j);
  } else {
    for (const auto& [name, value] : results) std::cout << name << ": " << value << "\n";
    if (agree) {
      std::cout << "det = " << results.front().second << "\n";
    } else {
      std::cout << "methods disagree\n";
    }
  }
  return agree ? 0 : kExitCheckFailed;
}

int run_det(const std::string& input, const std::string& method, bool as_json, int max_n) {
  const auto doc = read_document(input);
  const bool all_methods = method.empty();
  if (doc.mode == Mode::Rational) {
    const auto sys = cramer::numeric_system(doc);
    std::vector<std::pair<std::string, cramer::Rational>> results;
    if (all_methods || method == "leibniz") results.emplace_back("leibniz", cramer::big_x(sys, 0, max_n));
    if (method == "cofactor" || (all_methods && sys.size() <= cramer::kCofactorMaxN)) {
      results.emplace_back("cofactor", cramer::cofactor_det(sys));
    }
    if (all_methods || method == "bareiss") results.emplace_back("bareiss", cramer::bareiss_det(sys));
    return report_determinants(results, as_json);
  }
  if (method == "bareiss") throw cramer::InvalidArgument("bareiss needs a rational system");
  const auto sys = cramer::symbolic_system(doc);
  std::vector<std::pair<std::string, cramer::Polynomial>> results;
  if (all_methods || method == "leibniz") results.emplace_back("leibniz", cramer::big_x(sys, 0, max_n));
  if (method == "cofactor" || (all_methods && sys.size() <= cramer::kCofactorMaxN)) {
    results.emplace_back("cofactor", cramer::cofactor_det(sys));
  }
  return report_determinants(results, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear-system solving by signed permutation sums"};
  app.require_subcommand(1);
  int max_n = cramer::kDefaultMaxN;

  std::string input;
  bool as_json = false;
  auto* solve = app.add_subcommand("solve", "Solve a system by Cramer's rule");
  solve->add_option("--input", input, "Input JSON document")->required();
  solve->add_flag("--json", as_json, "Machine-readable output");
  solve->add_option("--max-n", max_n, "Size guard")->check(CLI::PositiveNumber);

  int n = 0;
  int i = 0;
  auto* verify = app.add_subcommand("verify-identity", "Check sum_j a[i,j] X_j = b[i] X_0 symbolically");
  verify->add_option("--n", n, "System size")->required();
  verify->add_option("--i", i, "Single row to check (default: all)");
  verify->add_flag("--json", as_json, "Machine-readable output");
  verify->add_option("--max-n", max_n, "Size guard")->check(CLI::PositiveNumber);

  std::string certificate;
  auto* involution = app.add_subcommand("check-involution", "Check both facts and the pairing for row i");
  involution->add_option("--n", n, "System size")->required();
  involution->add_option("--i", i, "Row")->required();
  involution->add_option("--emit-certificate", certificate, "Write the pairing certificate JSON here");
  involution->add_flag("--json", as_json, "Machine-readable output");
  involution->add_option("--max-n", max_n, "Size guard")->check(CLI::PositiveNumber);

  std::string method;
  auto* det = app.add_subcommand("det", "Determinant by one or all methods");
  det->add_option("--input", input, "Input JSON document")->required();
  det->add_option("--method", method, "leibniz | cofactor | bareiss (default: all available)")
      ->check(CLI::IsMember({"leibniz", "cofactor", "bareiss"}));
  det->add_flag("--json", as_json, "Machine-readable output");
  det->add_option("--max-n", max_n, "Size guard")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*solve) return run_solve(input, as_json, max_n);
    if (*verify) return run_verify_identity(n, i, as_json, max_n);
    if (*involution) return run_check_involution(n, i, certificate, as_json, max_n);
    if (*det) return run_det(input, method, as_json, max_n);
  } catch (const cramer::SingularSystem& e) {
    std::cerr << e.what() << "\n";
    return kExitSingular;
  } catch (const cramer::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const cramer::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cramer::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitParse;
  } catch (const cramer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitParse;
}
