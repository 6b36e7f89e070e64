#pragma once

// JSON input documents:
//
//   { "n": 2, "mode": "rational", "A": [["1","1"],["1","-1"]], "b": ["3","1"] }
//   { "n": 3, "mode": "symbolic" }   // generic a[i,j], b[i]
//
// Rational entries are strings "p" or "p/q" (plain JSON integers are also
// accepted); floating-point numbers are rejected. Symbolic entries are
// polynomial strings in the rendering grammar, e.g. "a[1,1] + 2*b[1]".

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cramer/errors.hpp"
#include "cramer/polynomial.hpp"
#include "cramer/rational.hpp"
#include "cramer/system.hpp"

namespace cramer {

enum class Mode { Rational, Symbolic };

struct InputDocument {
  int n = 0;
  Mode mode = Mode::Rational;
  std::optional<std::vector<std::vector<std::string>>> A;
  std::optional<std::vector<std::string>> b;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline std::string entry_string(const nlohmann::json& v, const char* where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError(std::string(where) + ": entries must be strings or integers, got " + v.dump());
}

}  // namespace detail

/// Structural parse plus entry validation. Throws ParseError.
inline InputDocument parse_document(const nlohmann::json& j) {
  InputDocument doc;
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  doc.n = j["n"].get<int>();
  if (doc.n < 1) throw ParseError("\"n\" must be positive");

  const std::string mode = j.value("mode", std::string("rational"));
  if (mode == "rational") {
    doc.mode = Mode::Rational;
  } else if (mode == "symbolic") {
    doc.mode = Mode::Symbolic;
  } else {
    throw ParseError("unknown mode \"" + mode + "\"");
  }

  const auto n = static_cast<std::size_t>(doc.n);
  if (j.contains("A")) {
    const auto& a = j["A"];
    if (!a.is_array() || a.size() != n) throw ParseError("\"A\" must have n rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : a) {
      if (!row.is_array() || row.size() != n) throw ParseError("every row of \"A\" must have n entries");
      std::vector<std::string> r;
      for (const auto& v : row) r.push_back(detail::entry_string(v, "A"));
      rows.push_back(std::move(r));
    }
    doc.A = std::move(rows);
  }
  if (j.contains("b")) {
    const auto& b = j["b"];
    if (!b.is_array() || b.size() != n) throw ParseError("\"b\" must have n entries");
    std::vector<std::string> r;
    for (const auto& v : b) r.push_back(detail::entry_string(v, "b"));
    doc.b = std::move(r);
  }
  if (doc.mode == Mode::Rational && (!doc.A || !doc.b)) {
    throw ParseError("rational mode requires both \"A\" and \"b\"");
  }

  // Validate every entry now so errors surface as parse errors.
  auto check = [&](const std::string& s) {
    if (doc.mode == Mode::Rational) {
      (void)Rational::parse(s);
    } else {
      (void)parse_polynomial(s);
    }
  };
  if (doc.A) {
    for (const auto& row : *doc.A) {
      for (const auto& s : row) check(s);
    }
  }
  if (doc.b) {
    for (const auto& s : *doc.b) check(s);
  }
  return doc;
}

inline InputDocument parse_document_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

inline nlohmann::json to_json(const InputDocument& doc) {
  nlohmann::json j;
  j["n"] = doc.n;
  j["mode"] = doc.mode == Mode::Rational ? "rational" : "symbolic";
  if (doc.A) j["A"] = *doc.A;
  if (doc.b) j["b"] = *doc.b;
  return j;
}

inline NumericSystem numeric_system(const InputDocument& doc) {
  if (doc.mode != Mode::Rational || !doc.A || !doc.b) throw InvalidArgument("not a rational document");
  std::vector<std::vector<Rational>> m;
  for (const auto& row : *doc.A) {
    std::vector<Rational> r;
    for (const auto& s : row) r.push_back(Rational::parse(s));
    m.push_back(std::move(r));
  }
  std::vector<Rational> rhs;
  for (const auto& s : *doc.b) rhs.push_back(Rational::parse(s));
  return NumericSystem(std::move(m), std::move(rhs));
}

/// Missing A or b fall back to the generic symbols a[i,j] / b[i].
inline SymbolicSystem symbolic_system(const InputDocument& doc) {
  if (doc.mode != Mode::Symbolic) throw InvalidArgument("not a symbolic document");
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(doc.n));
  std::vector<Polynomial> rhs;
  for (int i = 1; i <= doc.n; ++i) {
    for (int j = 1; j <= doc.n; ++j) {
      m[static_cast<std::size_t>(i - 1)].push_back(
          doc.A ? parse_polynomial((*doc.A)[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)])
                : Polynomial::a(i, j));
    }
    rhs.push_back(doc.b ? parse_polynomial((*doc.b)[static_cast<std::size_t>(i - 1)]) : Polynomial::b(i));
  }
  return SymbolicSystem(std::move(m), std::move(rhs));
}

/// Canonical document for a system (entries rendered with to_string).
template <Scalar T>
InputDocument to_document(const LinearSystem<T>& sys) {
  InputDocument doc;
  doc.n = sys.size();
  doc.mode = std::is_same_v<T, Rational> ? Mode::Rational : Mode::Symbolic;
  std::vector<std::vector<std::string>> a;
  for (const auto& row : sys.matrix()) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v.to_string());
    a.push_back(std::move(r));
  }
  std::vector<std::string> b;
  for (const auto& v : sys.rhs()) b.push_back(v.to_string());
  doc.A = std::move(a);
  doc.b = std::move(b);
  return doc;
}

}  // namespace cramer
