#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cramer/polynomial.hpp"
#include "cramer/rational.hpp"
#include "support.hpp"

namespace cramer {
namespace {

Polynomial a(int i, int j) { return Polynomial::a(i, j); }
Polynomial b(int i) { return Polynomial::b(i); }

TEST(Rational, CanonicalReduction) {
  const Rational half(BigInt(2), BigInt(4));
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(Rational(BigInt(3), BigInt(-6)).to_string(), "-1/2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).to_string(), "0");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).denominator(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), InvalidArgument);
}

TEST(Rational, Arithmetic) {
  const Rational x = Rational::parse("1/2");
  const Rational y = Rational::parse("1/3");
  EXPECT_EQ(rat_add(x, y), Rational::parse("5/6"));
  EXPECT_EQ(rat_add(x, Rational(0)), x);
  EXPECT_EQ(rat_mul(x, y), Rational::parse("1/6"));
  EXPECT_EQ(rat_neg(x), Rational::parse("-1/2"));
  EXPECT_EQ(rat_div(x, y), Rational::parse("3/2"));
  EXPECT_THROW(rat_div(x, Rational(0)), InvalidArgument);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-12").to_string(), "-12");
  EXPECT_EQ(Rational::parse(" 6/-4 ").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("+7/14").to_string(), "1/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("x/2"), ParseError);
}

TEST(Polynomial, AddExamples) {
  // w({1,4}) = w(1) + w(4) = a + b
  EXPECT_EQ(poly_add(a(1, 1), b(1)).to_string(), "a[1,1] + b[1]");
  const Polynomial p = a(1, 2) * b(2) - Polynomial(3);
  EXPECT_EQ(poly_add(p, Polynomial()), p);
  const Polynomial m = a(1, 1) * a(2, 2);
  EXPECT_TRUE(poly_add(m, -m).is_zero());
  EXPECT_EQ(poly_add(m, -m).to_string(), "0");
}

TEST(Polynomial, MulExamples) {
  const Polynomial prod = poly_mul(a(1, 1), a(2, 2));
  ASSERT_EQ(prod.term_count(), 1u);
  EXPECT_EQ(prod.terms().begin()->second, 1);
  EXPECT_EQ(prod.to_string(), "a[1,1]*a[2,2]");
  const Polynomial p = a(1, 2) * b(2) + Polynomial(3);
  EXPECT_EQ(poly_mul(p, Polynomial(1)), p);
  // (x + y)(x - y) = x^2 - y^2, four cross terms with two cancelling.
  const Polynomial x = a(1, 1);
  const Polynomial y = a(1, 2);
  EXPECT_EQ(poly_mul(x + y, x - y).to_string(), "a[1,1]^2 - a[1,2]^2");
}

TEST(Polynomial, NegateExamples) {
  EXPECT_TRUE(poly_negate(Polynomial()).is_zero());
  EXPECT_EQ(poly_negate(a(1, 2) * b(2)).to_string(), "-a[1,2]*b[2]");
  const Polynomial x = a(1, 1);
  const Polynomial y = b(1);
  EXPECT_EQ(poly_negate(x - y), y - x);
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial(-4).to_string(), "-4");
  const Polynomial p = Polynomial(-3) * a(2, 1) * a(1, 2) * b(2);
  EXPECT_EQ(p.to_string(), "-3*a[1,2]*a[2,1]*b[2]");
  const Polynomial q = a(1, 1) * a(1, 1) * b(1) + Polynomial(2) * a(1, 1) - Polynomial(7) + b(2);
  EXPECT_EQ(q.to_string(), "a[1,1]^2*b[1] + 2*a[1,1] + b[2] - 7");
}

TEST(Polynomial, ParseInvertsRender) {
  testing::Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Polynomial p = testing::random_polynomial(rng);
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << p;
  }
  EXPECT_EQ(parse_polynomial("b[1]*a[2,2] + 3 - a[1,1]^2").to_string(), "-a[1,1]^2 + a[2,2]*b[1] + 3");
  EXPECT_EQ(parse_polynomial("-2*a[1,1]*a[1,1]").to_string(), "-2*a[1,1]^2");
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("a[1]"), ParseError);
  EXPECT_THROW(parse_polynomial("c[1]"), ParseError);
  EXPECT_THROW(parse_polynomial("a[0,1]"), ParseError);
  EXPECT_THROW(parse_polynomial("a[1,1] +"), ParseError);
}

TEST(Evaluate, Examples) {
  const Polynomial det2 = a(1, 1) * a(2, 2) - a(2, 1) * a(1, 2);
  const Assignment v{{Symbol::a(1, 1), 1}, {Symbol::a(2, 2), -1}, {Symbol::a(2, 1), 1}, {Symbol::a(1, 2), 1}};
  EXPECT_EQ(evaluate(det2, v), Rational(-2));
  EXPECT_EQ(evaluate(Polynomial(), {}), Rational(0));
  EXPECT_EQ(evaluate(b(1), {{Symbol::b(1), Rational::parse("3/2")}}), Rational::parse("3/2"));
  EXPECT_THROW(evaluate(b(2), {{Symbol::b(1), 1}}), InvalidArgument);
}

TEST(Symbol, OrderPutsAllAsBeforeBs) {
  EXPECT_LT(Symbol::a(1, 2), Symbol::a(2, 1));
  EXPECT_LT(Symbol::a(9, 9), Symbol::b(1));
  EXPECT_LT(Symbol::b(1), Symbol::b(2));
}

class RingAxioms : public ::testing::Test {
 protected:
  testing::Rng rng{2024};
  Polynomial draw() { return testing::random_polynomial(rng); }
};

TEST_F(RingAxioms, HoldOnRandomPolynomials) {
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = draw();
    const Polynomial q = draw();
    const Polynomial r = draw();
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + Polynomial(), p);
    EXPECT_EQ(p * Polynomial(1), p);
    EXPECT_TRUE((p + poly_negate(p)).is_zero());
    EXPECT_TRUE((p * Polynomial()).is_zero());
  }
}

TEST_F(RingAxioms, CanonicalFormIgnoresInsertionOrder) {
  for (int k = 0; k < 100; ++k) {
    std::vector<Polynomial> parts;
    for (int t = 0; t < 6; ++t) parts.push_back(draw());
    Polynomial reference;
    for (const auto& p : parts) reference += p;
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(parts.begin(), parts.end(), rng);
      Polynomial sum;
      for (const auto& p : parts) sum += p;
      EXPECT_EQ(sum.to_string(), reference.to_string());
    }
  }
}

TEST(Homomorphism, EvaluateDistributesOverAddAndMul) {
  testing::Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = testing::random_polynomial(rng);
    const Polynomial q = testing::random_polynomial(rng);
    const Assignment v = testing::random_assignment(rng);
    EXPECT_EQ(evaluate(poly_add(p, q), v), rat_add(evaluate(p, v), evaluate(q, v)));
    EXPECT_EQ(evaluate(poly_mul(p, q), v), rat_mul(evaluate(p, v), evaluate(q, v)));
  }
}

}  // namespace
}  // namespace cramer
