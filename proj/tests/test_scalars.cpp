#include <random>

#include <gtest/gtest.h>

#include "painleve/number_field.hpp"
#include "painleve/rational.hpp"

using namespace painleve;

namespace {

Rational small_rational(std::mt19937& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(num(g), den(g));
}

NFScalar small_nf(std::mt19937& g) {
  return NFScalar(small_rational(g), small_rational(g), small_rational(g), small_rational(g));
}

}  // namespace

TEST(Rational, LowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), DomainError);
  EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("-.5"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("1."), DomainError);
  EXPECT_THROW(Rational::parse("1.2.3"), DomainError);
  EXPECT_EQ(Rational(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(Rational(-1, 2).to_decimal(3), "-0.500");
  EXPECT_EQ(Rational(2, 3).to_decimal(0), "1");
}

TEST(Rational, DivisionByZero) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(factorial(5), Rational(120));
  EXPECT_EQ(binomial(Rational(3, 2), 2), Rational(3, 8));
  EXPECT_EQ(binomial(Rational(-1, 4), 1), Rational(-1, 4));
  EXPECT_EQ(binomial(Rational(5), 7), Rational(0));
}

TEST(NumberField, Examples) {
  const NFScalar y = NFScalar::y();
  EXPECT_EQ(y * y * (y * y), NFScalar(3));
  EXPECT_EQ((NFScalar(1) + y * y) * (NFScalar(1) - y * y), NFScalar(-2));
  EXPECT_EQ(NFScalar(1) / y, NFScalar(0, 0, 0, Rational(1, 3)));
  EXPECT_EQ(NFScalar::sqrt3(), y * y);
}

TEST(NumberField, ToRational) {
  EXPECT_EQ(NFScalar(Rational(5, 3)).to_rational(), Rational(5, 3));
  EXPECT_THROW(NFScalar::sqrt3().to_rational(), IrrationalResidue);
  try {
    NFScalar::sqrt3().to_rational();
  } catch (const IrrationalResidue& e) {
    EXPECT_EQ(e.coeffs().size(), 4u);
    EXPECT_EQ(e.coeffs()[2], "1");
  }
  // y^4/3 entered unreduced.
  const NFScalar one = NFScalar::from_unreduced({0, 0, 0, 0, Rational(1, 3)});
  EXPECT_EQ(one.to_rational(), Rational(1));
}

TEST(NumberField, DivisionByZero) {
  EXPECT_THROW(NFScalar(1) / NFScalar(), DivisionByZero);
}

TEST(NumberField, ToDouble) {
  EXPECT_NEAR(NFScalar::y().to_double(), 1.3160740129524924, 1e-15);
  EXPECT_NEAR((NFScalar::sqrt3() + NFScalar(1)).to_double(), 2.7320508075688772, 1e-15);
}

TEST(NumberFieldProperty, FieldAxioms) {
  std::mt19937 g(20240611);
  for (int t = 0; t < 200; ++t) {
    const NFScalar a = small_nf(g), b = small_nf(g), c = small_nf(g);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), NFScalar(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(NumberFieldProperty, CanonicalizationIdempotent) {
  std::mt19937 g(7);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> raw;
    for (int i = 0; i < 11; ++i) raw.push_back(small_rational(g));
    const NFScalar once = NFScalar::from_unreduced(raw);
    std::vector<Rational> again(once.coeffs().begin(), once.coeffs().end());
    EXPECT_EQ(NFScalar::from_unreduced(again), once);
  }
}

TEST(NumberFieldProperty, RationalEmbeddingIsHomomorphism) {
  std::mt19937 g(11);
  for (int t = 0; t < 200; ++t) {
    const Rational p = small_rational(g), q = small_rational(g);
    EXPECT_EQ((NFScalar(p) + NFScalar(q)).to_rational(), p + q);
    EXPECT_EQ((NFScalar(p) - NFScalar(q)).to_rational(), p - q);
    EXPECT_EQ((NFScalar(p) * NFScalar(q)).to_rational(), p * q);
    if (!q.is_zero()) { EXPECT_EQ((NFScalar(p) / NFScalar(q)).to_rational(), p / q); }
  }
}

TEST(NumberFieldProperty, PowMatchesRepeatedProduct) {
  const NFScalar x(Rational(1, 2), 1, 0, Rational(-2, 3));
  NFScalar acc(1);
  for (int e = 0; e <= 6; ++e) {
    EXPECT_EQ(x.pow(e), acc);
    EXPECT_EQ(x.pow(-e) * acc, NFScalar(1));
    acc *= x;
  }
}
