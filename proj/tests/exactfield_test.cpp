#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcat/scalar.hpp"

using qcat::LaurentPoly;
using qcat::ScalarQ;

namespace {

LaurentPoly poly(int low, std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly::from_coeffs(low, std::move(c));
}

}  // namespace

TEST(QInt, CanonicalText) {
  EXPECT_EQ(qcat::qint(3).to_string(), "q^2 + 1 + q^(-2)");
  EXPECT_EQ(qcat::qint(0).to_string(), "0");
  EXPECT_EQ(qcat::qint(1).to_string(), "1");
  EXPECT_EQ(qcat::qfact(2).to_string(), "q + q^(-1)");
  EXPECT_EQ(qcat::qfact(0).to_string(), "1");
}

TEST(QInt, NegativeArgumentIsOdd) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qcat::qint(-n), -qcat::qint(n));
}

TEST(QInt, SquareOfTwo) {
  EXPECT_TRUE((qcat::qint(2) * qcat::qint(2) - qcat::qint(3) - ScalarQ(1)).is_zero());
}

TEST(QInt, MatchesNumericSine) {
  for (double t : {0.13, 0.37, 0.41, 0.73}) {
    for (int n = -3; n <= 12; ++n) {
      const auto z = qcat::eval_at(qcat::qint(n), t);
      EXPECT_NEAR(z.real(), oracle::qint_numeric(n, t), 1e-10) << n << " " << t;
      EXPECT_NEAR(z.imag(), 0.0, 1e-10);
    }
  }
}

TEST(QFact, RejectsNegative) { EXPECT_THROW(qcat::qfact(-1), qcat::DomainError); }

TEST(QFact, RecursiveDefinition) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(qcat::qfact(n), qcat::qfact(n - 1) * qcat::qint(n));
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(ScalarQ(1) / ScalarQ(0), qcat::DivisionByZero);
  EXPECT_THROW(ScalarQ(0).inverse(), qcat::DivisionByZero);
  EXPECT_THROW(ScalarQ(0).pow(-1), qcat::DivisionByZero);
}

TEST(Scalar, HalfIntegerPowers) {
  EXPECT_EQ(ScalarQ::v().to_string(), "q^(1/2)");
  EXPECT_EQ(ScalarQ::v_pow(-3).to_string(), "q^(-3/2)");
  EXPECT_EQ(ScalarQ::v() * ScalarQ::v(), ScalarQ::q());
  EXPECT_EQ(ScalarQ::q().inverse().to_string(), "q^(-1)");
}

TEST(Scalar, CanonicalDenominator) {
  // (q - q^-1) / (2q^3 - 2q) = 1/(2q^2); the denominator ends up with
  // lowest exponent 0 and positive leading coefficient.
  const ScalarQ s(poly(-2, {-1, 0, 1}), poly(2, {-2, 0, 2}));
  EXPECT_EQ(s.denominator().low(), 0);
  EXPECT_GT(sgn(s.denominator().leading()), 0);
  EXPECT_EQ(s, ScalarQ::q().pow(-2) / ScalarQ(2));
  const ScalarQ neg(poly(0, {1}), poly(0, {0, -1}));
  EXPECT_GT(sgn(neg.denominator().leading()), 0);
  EXPECT_EQ(neg.to_string(), "-q^(-1/2)");
}

TEST(Scalar, ParseExamples) {
  EXPECT_EQ(ScalarQ::parse("(-q^3 + q)/(q^2 - 1)").to_string(), "-q");
  EXPECT_EQ(ScalarQ::parse("q^(1/2)"), ScalarQ::v());
  EXPECT_EQ(ScalarQ::parse("-q^(-3/2)"), -ScalarQ::v_pow(-3));
  EXPECT_EQ(ScalarQ::parse("(q + 1)/2") * ScalarQ(2), ScalarQ::q() + ScalarQ(1));
  EXPECT_EQ(ScalarQ::parse("010*q^2"), ScalarQ(10) * ScalarQ::q().pow(2));
  EXPECT_THROW(ScalarQ::parse("q^"), qcat::ParseError);
  EXPECT_THROW(ScalarQ::parse("(q + 1"), qcat::ParseError);
  EXPECT_THROW(ScalarQ::parse("x"), qcat::ParseError);
  EXPECT_THROW(ScalarQ::parse("1/(q - q)"), qcat::ParseError);
}

TEST(Scalar, EvaluationSingularity) {
  const ScalarQ s = ScalarQ(1) / (ScalarQ::q() - ScalarQ(1));
  EXPECT_THROW(qcat::eval_at(s, 0.0), qcat::EvaluationSingularity);
  EXPECT_THROW(qcat::eval_at(s, 2.0), qcat::EvaluationSingularity);
  EXPECT_NO_THROW(qcat::eval_at(s, 0.5));
}

TEST(LaurentPoly, GcdAndExactDivision) {
  // (q^2 - 1) and (q^3 - q^2 + q - 1) share the factor q - 1.
  const LaurentPoly a = poly(0, {-1, 0, 1});
  const LaurentPoly b = poly(0, {-1, 1, -1, 1});
  const LaurentPoly g = LaurentPoly::gcd(a, b);
  EXPECT_EQ(g.span(), 1);
  EXPECT_TRUE(LaurentPoly::divexact(a, g) * g == a);
  EXPECT_TRUE(LaurentPoly::divexact(b, g) * g == b);
}

TEST(LaurentPoly, EvaluateMatchesHorner) {
  const LaurentPoly p = poly(-2, {3, 0, -1, 5});
  const std::complex<double> x(0.3, 0.7);
  const auto expected = 3.0 / (x * x) - 1.0 + 5.0 * x;
  EXPECT_NEAR(std::abs(p.evaluate(x) - expected), 0.0, 1e-12);
}

class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, HoldExactly) {
  oracle::ScalarSampler sample(GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const ScalarQ a = sample.scalar(), b = sample.scalar(), c = sample.scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_TRUE((a - a).is_zero());
    const ScalarQ d = sample.nonzero_scalar();
    EXPECT_TRUE((d * d.inverse()).is_one());
    EXPECT_EQ((a / d) * d, a);
    EXPECT_EQ(d.pow(3) * d.pow(-2), d);
  }
}

TEST_P(FieldAxioms, EvaluationIsARingMap) {
  oracle::ScalarSampler sample(GetParam() + 100);
  const double t = 0.41;
  for (int trial = 0; trial < 25; ++trial) {
    const ScalarQ a = sample.scalar(), b = sample.scalar();
    try {
      const auto za = qcat::eval_at(a, t), zb = qcat::eval_at(b, t);
      EXPECT_NEAR(std::abs(qcat::eval_at(a + b, t) - (za + zb)), 0.0, 1e-8 * (1 + std::abs(za) + std::abs(zb)));
      EXPECT_NEAR(std::abs(qcat::eval_at(a * b, t) - za * zb), 0.0, 1e-8 * (1 + std::abs(za * zb)));
    } catch (const qcat::EvaluationSingularity&) {
    }
  }
}

TEST_P(FieldAxioms, PrintParseRoundTrip) {
  oracle::ScalarSampler sample(GetParam() + 200);
  for (int trial = 0; trial < 25; ++trial) {
    const ScalarQ a = sample.scalar() * ScalarQ::v_pow(trial % 3);
    const std::string text = a.to_string();
    const ScalarQ back = ScalarQ::parse(text);
    EXPECT_EQ(back, a) << text;
    EXPECT_EQ(back.to_string(), text);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FieldAxioms, ::testing::Values(1u, 7u, 2024u));

TEST(QIntProperty, AdditionFormula) {
  // [m + n] = [m] q^n + q^-m [n]
  const ScalarQ q = ScalarQ::q();
  for (int m = -5; m <= 8; ++m)
    for (int n = -5; n <= 8; ++n)
      EXPECT_EQ(qcat::qint(m + n), qcat::qint(m) * q.pow(n) + q.pow(-m) * qcat::qint(n)) << m << "," << n;
}

TEST(QIntProperty, BarInvariant) {
  // [n] is invariant under q -> q^-1, so its coefficients are palindromic.
  for (int n = 1; n <= 10; ++n) {
    const LaurentPoly p = qcat::qint(n).numerator();
    EXPECT_EQ(p.low(), -p.high());
    for (int k = p.low(); k <= p.high(); ++k) EXPECT_EQ(p.coeff(k), p.coeff(-k));
  }
}
