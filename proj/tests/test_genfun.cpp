#include <cmath>

#include <boost/math/special_functions/airy.hpp>
#include <gtest/gtest.h>

#include "painleve/genfun.hpp"

using namespace painleve;

namespace {

const NF y = NF::y();

NFLaurent body(std::initializer_list<Rational> c) {
  std::vector<NF> nf;
  for (const auto& r : c) nf.emplace_back(r);
  return NFLaurent(Var::zeta, 0, nf) * y;
}

NFGauged tilde(const NFLaurent& b) { return NFGauged(b, Rational(1, 2), NF(Rational(3, 2))); }

// Independent oracle: u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2)), evaluated as a ratio of
// products of half-integers.
Rational airy_u_gamma(int k) {
  Rational num(1), den(1);
  for (int j = k; j < 3 * k; ++j) num *= Rational(2 * j + 1, 2);
  for (int j = 1; j <= k; ++j) den *= Rational(54 * j);
  return num / den;
}

}  // namespace

TEST(AiryU, Values) {
  EXPECT_EQ(airy_u(0), Rational(1));
  EXPECT_EQ(airy_u(1), Rational(5, 72));
  EXPECT_EQ(airy_u(2), Rational(385, 10368));
  EXPECT_THROW(airy_u(-1), DomainError);
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(airy_u(k), airy_u_gamma(k)) << k;
}

TEST(Expansion, BiSideLowOrders) {
  const LambdaSeries s = expand_generating(-1, 2);
  ASSERT_EQ(s.order(), 2);
  EXPECT_EQ(s[0], tilde(body({1})));
  EXPECT_EQ(s[1], tilde(body({Rational(5, 18), 0, -1, 0, Rational(3, 2)})));
  EXPECT_EQ(s[2], tilde(body({Rational(385, 648), 0, Rational(-35, 18), 0, Rational(35, 12), 0, Rational(-5, 2), 0,
                              Rational(9, 8)})));
}

TEST(Expansion, AiSideMirrorsBiSide) {
  // delta -> -delta flips the sign of every odd-degree-in-delta coefficient: zeta^(2m) in the
  // lambda^j body picks up (-1)^(j+m).
  const LambdaSeries a = expand_generating(1, 5), b = expand_generating(-1, 5);
  for (int j = 0; j <= 5; ++j) {
    const NFLaurent& ba = a[j].body();
    const NFLaurent& bb = b[j].body();
    EXPECT_EQ(ba.highest(), bb.highest());
    for (int p = 0; p <= bb.highest(); p += 2) {
      const NF sign = (j + p / 2) % 2 ? NF(-1) : NF(1);
      EXPECT_EQ(ba.coeff(p), bb.coeff(p) * sign) << j << " " << p;
    }
    EXPECT_EQ(a[j].e2(), -b[j].e2());
  }
}

TEST(Expansion, RejectsBadInput) {
  EXPECT_THROW(expand_generating(0, 2), DomainError);
  EXPECT_THROW(expand_generating(1, -1), DomainError);
}

TEST(Decompose, FirstTermInChain) {
  const std::vector<NFGauged> chi = rescaled_chain(-1, 1);
  const std::vector<NF> c = decompose_in_chain(expand_generating(-1, 1)[1], chi);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], NF(Rational(5, 18)));
  EXPECT_EQ(c[1], NF(1));
}

TEST(Decompose, OutsideSpanThrows) {
  const std::vector<NFGauged> chi = rescaled_chain(-1, 1);
  const NFGauged odd = tilde(NFLaurent::monomial(Var::zeta, 1, NF(1)));
  EXPECT_THROW(decompose_in_chain(odd, chi), IntegrityError);
  const NFGauged wrong_gauge(NFLaurent::constant(Var::zeta, NF(1)), Rational(1, 2), NF(Rational(-3, 2)));
  EXPECT_THROW(decompose_in_chain(wrong_gauge, chi), IntegrityError);
}

TEST(SeriesChain, BothSignsToOrderEight) {
  for (int d : {1, -1}) {
    const Report r = verify_series_chain(expand_generating(d, 8), 8);
    for (const auto& f : r.failures()) ADD_FAILURE() << f.identity << " " << f.index << " " << f.detail;
    EXPECT_GE(r.entries().size(), 27u);
  }
  EXPECT_THROW(verify_series_chain(expand_generating(1, 3), 4), DomainError);
}

TEST(SeriesChain, PerturbedCoefficientFails) {
  LambdaSeries s = expand_generating(-1, 4);
  s.coeffs[2] = s.coeffs[2].with_body(s.coeffs[2].body() + NFLaurent::monomial(Var::zeta, 2, NF(1)));
  const Report r = verify_series_chain(s, 4);
  EXPECT_FALSE(r.all_ok());
  EXPECT_TRUE(r.failed("series_chain[-]"));

  LambdaSeries odd = expand_generating(1, 2);
  odd.coeffs[1] = odd.coeffs[1].with_body(odd.coeffs[1].body() + NFLaurent::monomial(Var::zeta, 1, NF(1)));
  EXPECT_TRUE(verify_series_chain(odd, 2).failed("series_even[+]"));
}

TEST(SeriesChain, ChiChainRelation) {
  for (int d : {1, -1}) {
    const std::vector<NFGauged> chi = rescaled_chain(d, 5);
    for (int j = 1; j <= 5; ++j) EXPECT_TRUE(schrodinger_defect(chi[j], chi[j - 1]).is_zero()) << d << " " << j;
  }
}

TEST(Airy, SeriesMatchesBoost) {
  for (double x = -12.0; x <= 6.0; x += 0.75) {
    const AiryPair a = airy_series(Float50(x));
    const double ai = boost::math::airy_ai(x), bi = boost::math::airy_bi(x);
    EXPECT_NEAR(static_cast<double>(a.ai), ai, 1e-12 * (1 + std::abs(ai))) << x;
    EXPECT_NEAR(static_cast<double>(a.bi), bi, 1e-12 * (1 + std::abs(bi))) << x;
  }
  // Ai decays fast; compare relatively where it is tiny.
  for (double x : {8.0, 10.0, 11.5}) {
    const double ai = boost::math::airy_ai(x);
    EXPECT_NEAR(static_cast<double>(airy_series(Float50(x)).ai) / ai, 1.0, 1e-10) << x;
  }
  EXPECT_THROW(airy_series(Float50(12.5)), DomainError);
}

TEST(Lax, GridResidualsSmall) {
  for (double z : {1.0, 0.5, 2.0})
    for (double l : {1.0, 0.5, 2.0}) {
      const Report r = numeric_lax_check(z, l, 1e-8);
      for (const auto& f : r.failures()) ADD_FAILURE() << f.identity << " " << f.detail;
    }
}

TEST(Lax, WrongExponentFails) {
  const Report r = numeric_lax_check(1.0, 1.0, 1e-8, Rational(1, 4));
  EXPECT_FALSE(r.all_ok());
  const LaxResidual res = lax_residuals(1.0, 1.0, 1, 0, Rational(1, 4));
  EXPECT_LT(res.residual1, 1e-8);  // the z equation does not see the lambda prefactor
  EXPECT_GT(res.residual2, 1e-3);
}

TEST(Lax, DomainErrors) {
  EXPECT_THROW(lax_residuals(-1.0, 1.0, 1, 0), DomainError);
  EXPECT_THROW(lax_residuals(1.0, 0.0, 1, 0), DomainError);
  const Report far = numeric_lax_check(4.0, 4.0, 1e-8);
  EXPECT_FALSE(far.all_ok());
}
