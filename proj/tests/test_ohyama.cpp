#include <gtest/gtest.h>

#include "painleve/ohyama.hpp"

using namespace painleve;

namespace {

ZPoly sp(std::initializer_list<Rational> c) { return ZPoly(Var::s, std::vector<Rational>(c)); }
ZPoly zt(std::initializer_list<Rational> c) { return ZPoly(Var::zeta, std::vector<Rational>(c)); }
RatFn zfn(const ZPoly& n, const ZPoly& d) { return RatFn(n, d); }
NFLaurent nfl(std::initializer_list<NF> c) { return NFLaurent(Var::zeta, 0, std::vector<NF>(c)); }

const NF y = NF::y();
const NF r3 = NF::sqrt3();

// Factors of P_n and V_n for n <= 3.
const ZPoly kA = zt({1, 0, 3});                                // 3 zeta^2 + 1
const ZPoly kB = zt({5, 0, 12, 0, 9});                         // 9 zeta^4 + 12 zeta^2 + 5
const ZPoly kC = zt({35, 0, 210, 0, 360, 0, 270, 0, 81});      // degree 8 factor of P_3

}  // namespace

TEST(CoeffA, Examples) {
  EXPECT_EQ(coeff_A(0, 0, Profile::canonical), y);
  EXPECT_EQ(coeff_A(1, 2, Profile::canonical), y * r3 * NF(Rational(3, 2)));
  EXPECT_EQ(coeff_A(2, 3, Profile::alternate), NF(Rational(10, 9)));
}

TEST(CoeffA, SymmetryAndZeros) {
  for (Profile p : {Profile::canonical, Profile::alternate}) {
    const CoeffTable<NF> t = coeff_table(p, 7);
    for (int m = 1; m <= 7; ++m) {
      EXPECT_TRUE(t(m, 0).is_zero());
      EXPECT_TRUE(t(-m, 0).is_zero());
      for (int k = 0; k <= 2 * m + 3; ++k) {
        const NF sign = k % 2 ? NF(-1) : NF(1);
        EXPECT_EQ(t(m, k), sign * t(-m, k)) << m << "," << k;
        if (k > 2 * m) { EXPECT_TRUE(t(m, k).is_zero()); }
      }
    }
    EXPECT_THROW(t(8, 0), DomainError);
  }
}

TEST(CoeffA, AlternateProfileClosedForms) {
  const CoeffTable<NF> t = coeff_table(Profile::alternate, 6);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(t(n, 2 * n), NF(factorial(n).inverse())) << n;
    EXPECT_EQ(t(n, 2 * n - 1), NF(Rational(2 * (2 * n + 1), 9) / factorial(n - 1))) << n;
    EXPECT_EQ(t(n, 2 * n - 2), NF(Rational(2 * (4 * n * n + 10 * n + 9), 81) / factorial(n - 2))) << n;
  }
}

TEST(CoeffA, CanonicalTopCoefficient) {
  const CoeffTable<NF> t = coeff_table(Profile::canonical, 6);
  for (int m = 0; m <= 6; ++m)
    EXPECT_EQ(t(m, 2 * m), (r3 * NF(Rational(3, 2))).pow(m) * y * NF(factorial(m).inverse())) << m;
}

TEST(EntryW, Examples) {
  EXPECT_EQ(entry_W(1, Profile::canonical), NFLaurent::constant(Var::zeta, y));
  EXPECT_EQ(entry_W(2, Profile::canonical), nfl({0, 0, 1, 0, NF(Rational(3, 2))}) * (y * r3));
  EXPECT_EQ(entry_W(-2, Profile::canonical), nfl({0, 0, -1, 0, NF(Rational(3, 2))}) * (y * r3));
  EXPECT_THROW(entry_W(0, Profile::canonical), DomainError);
}

TEST(Rho, LowIndexValues) {
  EXPECT_EQ(rho_wronskian(0), sp({1}));
  EXPECT_EQ(rho_wronskian(1), sp({1}));
  EXPECT_EQ(rho_wronskian(2), sp({1, 1}));
  EXPECT_EQ(rho_wronskian(3), sp({5, 4, 1}));
  EXPECT_EQ(rho_recurrence(1), sp({1}));
  EXPECT_EQ(rho_recurrence(2), sp({1, 1}));
  EXPECT_EQ(rho_recurrence(-2), sp({-1, 1}));
  EXPECT_EQ(rho_recurrence(-3), sp({5, -4, 1}));
  EXPECT_EQ(rho_bc(2), sp({1, 1}));
  EXPECT_EQ(rho_bc(3), sp({5, 4, 1}));
  EXPECT_EQ(rho_bc(4), rho_recurrence(4));
  EXPECT_EQ(rho_bc(4), rho_wronskian(4));
}

TEST(Rho, RoutesAndShapeUpToEight) {
  const Report r = verify_rho_routes(8);
  for (const auto& f : r.failures()) ADD_FAILURE() << f.identity << " " << f.index << " " << f.detail;
}

TEST(Rho, ProfileIndependence) {
  for (int n = -7; n <= 7; ++n) EXPECT_EQ(rho_wronskian(n, Profile::alternate), rho_wronskian(n)) << n;
}

TEST(Rho, SignSymmetry) {
  const auto rho = rho_recurrence_table(9);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(rho.at(-n), sign_mirror(rho.at(n), n)) << n;
  EXPECT_NE(rho.at(-3), rho.at(3).substitute_monomial(Var::s, Rational(-1), 1) * Rational(-1));
}

TEST(Rho, FirstOrderSolveRejectsNonPolynomial) {
  // X (1) + X' (0) = s^2 works; X s - X' = 1 has no polynomial solution.
  EXPECT_EQ(detail::solve_first_order(sp({1}), ZPoly(Var::s), sp({0, 0, 1})), sp({0, 0, 1}));
  EXPECT_THROW(detail::solve_first_order(sp({0, 1}), sp({-1}), sp({1, 0, 1})), IntegrityError);
}

TEST(AlgebraicP, LowIndexValues) {
  const ZPoly zeta = zt({0, 1});
  EXPECT_EQ(algebraic_P(0), RatFn(zeta));
  EXPECT_EQ(algebraic_P(1), zfn(kA, zt({0, 3})));
  EXPECT_EQ(algebraic_P(2), zfn(zeta * kB, kA * kA));
  EXPECT_EQ(algebraic_P(3), zfn(kA * kC, zt({0, 3}) * kB * kB));
}

TEST(Potential, LowIndexValues) {
  const ZPoly d6 = ZPoly::monomial(Var::zeta, 6, Rational(144));
  const RatFn v0 = zfn(zt({5, 0, 0, 0, -36}), d6);
  const RatFn v1 = zfn(zt({-7, 0, 24, 0, -36}), d6);
  const RatFn v2 = zfn(zt({5, 0, 30, 0, -135, 0, 216, 0, -324}), d6 * kA * kA);
  const RatFn v3 = zfn(zt({-175, 0, 0, 0, 630, 0, -1080, 0, -1215, 0, -1944, 0, -2916}), d6 * kB * kB);
  const std::vector<RatFn> expect{v0, v1, v2, v3};
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(potential_V(n, false), expect[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(potential_V(n, true), expect[static_cast<std::size_t>(n)]) << n;
  }
  EXPECT_EQ(RatFn(seed_potential()), v0);
}

TEST(Backlund, Examples) {
  EXPECT_EQ(backlund(algebraic_P(0), Rational(0), 1), algebraic_P(1));
  EXPECT_EQ(backlund(algebraic_P(1), Rational(2), 1), algebraic_P(2));
  EXPECT_EQ(backlund(algebraic_P(1), Rational(2), -1), algebraic_P(0));
  EXPECT_THROW(backlund(RatFn(Var::zeta), Rational(0), 1), DomainError);
  for (int n = -8; n <= 7; ++n) EXPECT_EQ(backlund(algebraic_P(n), Rational(2 * n), 1), algebraic_P(n + 1)) << n;
}

TEST(Eigenfunction, Examples) {
  const NFGauged psi1 = gen_eigenfunction_psi(1, Profile::canonical);
  EXPECT_EQ(psi1, NFGauged(NFLaurent::constant(Var::zeta, y), Rational(1, 2), NF(Rational(-3, 2))));
  const NFGauged psim1 = gen_eigenfunction_psi(-1, Profile::canonical);
  EXPECT_EQ(psim1, NFGauged(NFLaurent::constant(Var::zeta, y), Rational(1, 2), NF(Rational(3, 2))));
  const NFGauged psi2 = gen_eigenfunction_psi(2, Profile::canonical);
  const NFLaurent body = nfl({0, 0, 3, 0, NF(Rational(9, 2))}) * y.inverse();
  EXPECT_EQ(psi2, NFGauged(body, Rational(1, 2), NF(Rational(-3, 2))));
  EXPECT_THROW(gen_eigenfunction_psi(0, Profile::canonical), DomainError);
}

TEST(Eigenfunction, JordanChainBothProfiles) {
  for (Profile p : {Profile::canonical, Profile::alternate}) {
    const CoeffTable<NF> t = coeff_table(p, 8);
    for (int n = -8; n <= 8; ++n) {
      if (n == 0) continue;
      const int d = n > 0 ? 1 : -1;
      const NFGauged prev = n == d ? NFGauged(NFLaurent(Var::zeta), Rational(1, 2), NF(Rational(-3 * d, 2)))
                                   : psi_gauged(n - d, t);
      EXPECT_TRUE(jordan_chain_defect(psi_gauged(n, t), prev, t.a(), d).is_zero()) << n;
    }
  }
}

TEST(Gauged, LowIndexValues) {
  const OhyamaFamily fam(Profile::canonical, 4);
  const auto one = NFLaurent::constant(Var::zeta, NF(1));
  const NFLaurent A = to_nf(Laurent<Rational>(kA));
  const NFLaurent B = to_nf(Laurent<Rational>(kB));
  const NFLaurent C = to_nf(Laurent<Rational>(kC));
  const NF e4(Rational(-9, 8));

  EXPECT_EQ(fam.theta(0), NFGauged(one, 0));
  EXPECT_EQ(fam.theta(1), NFGauged(one * y, Rational(1, 2), NF(Rational(-3, 2))));
  EXPECT_EQ(fam.theta(2), NFGauged(A, 0, NF(-3)));
  EXPECT_EQ(fam.theta(3), NFGauged(B * y, Rational(1, 2), NF(Rational(-9, 2))));

  EXPECT_EQ(fam.sigma(0), NFGauged(one, Rational(-5, 24), NF(), e4));
  EXPECT_EQ(fam.sigma(1), NFGauged(one * y, Rational(7, 24), NF(Rational(-3, 2)), e4));
  EXPECT_EQ(fam.sigma(2), NFGauged(A, Rational(-5, 24), NF(-3), e4));
  EXPECT_EQ(fam.sigma(3), NFGauged(B * y, Rational(7, 24), NF(Rational(-9, 2)), e4));

  auto phi_is = [&](int n, const NFLaurent& num, const NFLaurent& den, const Rational& power) {
    const GaugedQuotient<NF> want{NFGauged(num, power, NF(Rational(-3, 2))), NFGauged(den, 0)};
    return fam.phi(n).equals(want);
  };
  EXPECT_TRUE(phi_is(0, one * y, one, Rational(1, 2)));
  EXPECT_TRUE(phi_is(1, A * y.inverse(), one, Rational(-1, 2)));
  EXPECT_TRUE(phi_is(2, B * y, A, Rational(1, 2)));
  EXPECT_TRUE(phi_is(3, C * y.inverse(), B, Rational(-1, 2)));
  EXPECT_FALSE(phi_is(3, C * y, B, Rational(-1, 2)));

  const GaugedObjects g = gauged_objects(2);
  EXPECT_EQ(g.theta, fam.theta(2));
  EXPECT_EQ(g.sigma, fam.sigma(2));
}

TEST(Family, AllChecksPassSmall) {
  const Report r = verify_family(4);
  for (const auto& f : r.failures()) ADD_FAILURE() << f.identity << " " << f.index << " " << f.detail;
  EXPECT_TRUE(r.passed("p3d7"));
  EXPECT_TRUE(r.passed("taubc"));
}

TEST(Family, AlternateProfileChecks) {
  const Report r = verify_family(3, Profile::alternate);
  for (const auto& f : r.failures()) ADD_FAILURE() << f.identity << " " << f.index << " " << f.detail;
}

TEST(NegativeControls, EveryDefectSeesAPerturbation) {
  const OhyamaFamily fam(Profile::canonical, 3);
  const RatFn bumpP = fam.P(2) + RatFn::constant(Var::zeta, Rational(1));
  EXPECT_TRUE(p3d7_residual(fam.P(2), Rational(4)).is_zero());
  EXPECT_FALSE(p3d7_residual(bumpP, Rational(4)).is_zero());
  EXPECT_TRUE(p3d7_residual(algebraic_P(0), Rational(0)).is_zero());

  EXPECT_FALSE(jordan_chain_defect(fam.psi(3), fam.psi(2), fam.a() * NF(2), 1).is_zero());

  const ZPoly bump = fam.rho(3) + sp({1});
  EXPECT_FALSE(rhorelation_defect(fam.rho(1), fam.rho(2), bump, 2).is_zero());
  EXPECT_FALSE(newrho_defect(fam.rho(1), fam.rho(2), bump, 2).is_zero());
  EXPECT_FALSE(rhorelation_defect(fam.rho(1), fam.rho(2), fam.rho(3), 3).is_zero());

  const NFGauged s1 = fam.sigma(1), s2 = fam.sigma(2), s3 = fam.sigma(3);
  const NFGauged s3b = s3.with_body(s3.body() + NFLaurent::constant(Var::zeta, NF(1)));
  EXPECT_TRUE(tau_bc_defect(s1, s2, s3, r3).is_zero());
  EXPECT_FALSE(tau_bc_defect(s1, s2, s3b, r3).is_zero());
  EXPECT_FALSE(tau_bc_defect(s1, s2, s3, NF(1)).is_zero());
  EXPECT_TRUE(tau_toda_defect(s1, s2, s3, r3).is_zero());
  EXPECT_FALSE(tau_toda_defect(s1, s2, s3b, r3).is_zero());
  EXPECT_THROW(bc_constant(s1, s2, s3b), IntegrityError);

  // A wrong parameter makes the two forms of the transformation disagree.
  EXPECT_THROW(backlund(fam.P(1), Rational(4), 1), IntegrityError);
  EXPECT_NE(potential_from_P(bumpP, Rational(4)), fam.V_from_P(2));
  EXPECT_NE(fam.rho(-3), sign_mirror(bump, 3));
}
