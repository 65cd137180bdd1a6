#pragma once

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/cbrt.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "painleve/gauged.hpp"
#include "painleve/ohyama.hpp"
#include "painleve/report.hpp"

namespace painleve {

/// Coefficients of the Airy asymptotic series; u_0 = 1.
inline Rational airy_u(int k) {
  if (k < 0) throw DomainError("airy_u needs k >= 0");
  Rational u(1);
  for (int j = 1; j <= k; ++j)
    u *= Rational((6 * j - 5) * (6 * j - 3) * (6 * j - 1), 216 * j * (2 * j - 1));
  return u;
}

/// Coefficients of lambda^0..lambda^N of a generating function; every entry carries
/// the gauge zeta^(1/2) exp(-delta 3/2 zeta^2).
struct LambdaSeries {
  int delta = 1;
  std::vector<NFGauged> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const NFGauged& operator[](int j) const { return coeffs.at(static_cast<std::size_t>(j)); }
};

namespace detail {

// Truncated power series in lambda with polynomial-in-zeta coefficients.
using ZetaSeries = std::vector<ZPoly>;

inline ZetaSeries series_zero(int n) { return ZetaSeries(static_cast<std::size_t>(n) + 1, ZPoly(Var::zeta)); }

inline ZetaSeries series_mul(const ZetaSeries& a, const ZetaSeries& b) {
  const int n = static_cast<int>(a.size()) - 1;
  ZetaSeries out = series_zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return out;
}

/// exp(e) for e with zero constant term: k f_k = sum_j j e_j f_{k-j}.
inline ZetaSeries series_exp(const ZetaSeries& e) {
  if (!e[0].is_zero()) throw DomainError("series_exp needs a zero constant term");
  const int n = static_cast<int>(e.size()) - 1;
  ZetaSeries f = series_zero(n);
  f[0] = ZPoly::constant(Var::zeta, Rational(1));
  for (int k = 1; k <= n; ++k) {
    ZPoly acc(Var::zeta);
    for (int j = 1; j <= k; ++j) acc += e[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)] * Rational(j);
    f[static_cast<std::size_t>(k)] = acc * Rational(1, k);
  }
  return f;
}

/// (1 + 4 lambda zeta^2)^alpha.
inline ZetaSeries series_binomial(const Rational& alpha, int n) {
  ZetaSeries out = series_zero(n);
  for (int j = 0; j <= n; ++j)
    out[static_cast<std::size_t>(j)] = ZPoly::monomial(Var::zeta, 2 * j, binomial(alpha, j) * Rational(4).pow(j));
  return out;
}

}  // namespace detail

/// Expansion in lambda of the Airy generating function (Ai for delta = 1, Bi for delta = -1),
/// normalized so the lambda^0 term is 3^(1/4) zeta^(1/2) exp(-delta 3/2 zeta^2).
///
/// With X = 4 lambda zeta^2 the Airy variable is xi = (1+X)^(3/2) / (4 lambda), and
///   Psi = 3^(1/4) zeta^(1/2) e^(-delta 3/2 zeta^2) (1+X)^(-1/4) exp(-delta E)
///         (1 + sum_k (-delta)^k u_k (4 lambda)^k (1+X)^(-3k/2)),
/// where E = xi - 1/(4 lambda) - 3/2 zeta^2 = sum_{j>=2} C(3/2,j) 4^(j-1) lambda^(j-1) zeta^(2j).
inline LambdaSeries expand_generating(int delta, int n) {
  if (delta != 1 && delta != -1) throw DomainError("delta must be +1 or -1");
  if (n < 0) throw DomainError("expansion order must be >= 0");
  using namespace detail;

  ZetaSeries e = series_zero(n);
  for (int j = 2; j - 1 <= n; ++j)
    e[static_cast<std::size_t>(j - 1)] =
        ZPoly::monomial(Var::zeta, 2 * j, binomial(Rational(3, 2), j) * Rational(4).pow(j - 1) * Rational(-delta));
  const ZetaSeries front = series_mul(series_binomial(Rational(-1, 4), n), series_exp(e));

  ZetaSeries tail = series_zero(n);
  tail[0] = ZPoly::constant(Var::zeta, Rational(1));
  for (int k = 1; k <= n; ++k) {
    const Rational w = Rational(-delta).pow(k) * airy_u(k) * Rational(4).pow(k);
    const ZetaSeries b = series_binomial(Rational(-3 * k, 2), n - k);
    for (int j = 0; j + k <= n; ++j) tail[static_cast<std::size_t>(j + k)] += b[static_cast<std::size_t>(j)] * w;
  }

  const ZetaSeries f = series_mul(front, tail);
  LambdaSeries out;
  out.delta = delta;
  for (const auto& c : f)
    out.coeffs.emplace_back(NFLaurent(to_nf(c)) * NF::y(), Rational(1, 2), NF(Rational(-3 * delta, 2)));
  return out;
}

/// Writes f = sum_i c_i basis[i] exactly by peeling off leading terms.
/// The basis bodies must have distinct top degrees; throws IntegrityError if f is outside the span.
inline std::vector<NF> decompose_in_chain(const NFGauged& f, const std::vector<NFGauged>& basis) {
  std::vector<NF> c(basis.size());
  NFGauged rest = f;
  while (!rest.is_zero()) {
    if (!(rest.gauge() == f.gauge())) throw GaugeMismatch("decompose_in_chain: gauge changed");
    const int top = rest.body().highest();
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].gauge() == rest.gauge() && basis[i].body().highest() == top) hit = i;
    if (hit == basis.size()) throw IntegrityError("leftover term zeta^" + std::to_string(top) + " outside the chain span");
    const NF k = rest.body().coeff(top) / basis[hit].body().coeff(top);
    c[hit] += k;
    rest = rest - basis[hit] * k;
  }
  return c;
}

/// psi_{delta(j+1)} rescaled so that chi_j'' + V0 chi_j = chi_{j-1}, for j = 0..n.
inline std::vector<NFGauged> rescaled_chain(int delta, int n, Profile p = Profile::canonical) {
  const CoeffTable<NF> table = coeff_table(p, n + 1);
  const NF step = (table.a() * NF(-delta)).inverse();
  std::vector<NFGauged> out;
  NF w(1);
  for (int j = 0; j <= n; ++j) {
    out.push_back(psi_gauged(delta * (j + 1), table) * w);
    w *= step;
  }
  return out;
}

/// f'' + V0 f - g in z.
inline NFGauged schrodinger_defect(const NFGauged& f, const NFGauged& g) {
  return d_dz(d_dz(f)) + f * to_nf(seed_potential()) - g;
}

/// Exact checks of a generating series up to order n: the lambda^0 term is an
/// eigenfunction, each later term feeds the one below it, the bodies are even in zeta,
/// and each term is the matching rescaled psi plus lower chain members.
inline Report verify_series_chain(const LambdaSeries& s, int n) {
  Report r;
  if (n > s.order()) throw DomainError("series is shorter than the requested order");
  const std::vector<NFGauged> chi = rescaled_chain(s.delta, n);
  const std::string tag = s.delta > 0 ? "[+]" : "[-]";
  r.run("series_eigenfunction" + tag, 0, [&] {
    return schrodinger_defect(s[0], NFGauged(NFLaurent(Var::zeta), Rational(1, 2), s[0].e2())).is_zero();
  });
  for (int j = 0; j <= n; ++j) {
    if (j >= 1)
      r.run("series_chain" + tag, j, [&] { return schrodinger_defect(s[j], s[j - 1]).is_zero(); });
    r.run("series_even" + tag, j, [&] { return s[j].body().is_even(); });
    r.run("series_in_chain_span" + tag, j, [&] {
      const std::vector<NF> c =
          decompose_in_chain(s[j], std::vector<NFGauged>(chi.begin(), chi.begin() + j + 1));
      return c[static_cast<std::size_t>(j)] == NF(1);
    });
  }
  return r;
}

// Numeric side: the Airy solution of the Lax pair for the seed solution P = zeta.

using Float50 = boost::multiprecision::cpp_bin_float_50;

/// Largest |x| accepted by the Maclaurin Airy evaluator.
inline constexpr double kAiryRange = 12.0;

/// Ai and Bi by their Maclaurin series. The cancellation in Ai costs about
/// x^(3/2) decimal digits, which 50-digit arithmetic absorbs on |x| <= 12.
struct AiryPair {
  Float50 ai;
  Float50 bi;
};

inline AiryPair airy_series(const Float50& x) {
  using boost::multiprecision::abs;
  if (abs(x) > kAiryRange) throw DomainError("Airy argument outside the series range");
  const Float50 third = Float50(1) / 3;
  const Float50 c1 = 1 / (boost::math::cbrt(Float50(9)) * boost::math::tgamma(2 * third));
  const Float50 c2 = 1 / (boost::math::cbrt(Float50(3)) * boost::math::tgamma(third));
  const Float50 x3 = x * x * x;
  const Float50 eps = std::numeric_limits<Float50>::epsilon() * Float50(1e-4);
  Float50 f = 1, g = x, tf = 1, tg = x;
  for (int k = 1; k < 400; ++k) {
    tf *= x3 / ((3 * k - 1) * (3 * k));
    tg *= x3 / ((3 * k) * (3 * k + 1));
    f += tf;
    g += tg;
    if (abs(tf) < eps * abs(f) && abs(tg) < eps * (abs(g) + 1)) break;
  }
  const Float50 s3 = boost::multiprecision::sqrt(Float50(3));
  return {c1 * f - c2 * g, s3 * (c1 * f + c2 * g)};
}

/// lambda^e zeta^(1/2) [c1 Ai(w) + c2 Bi(w)], w = (9/lambda^2)^(1/3) (1/4 + lambda zeta^2).
/// The Lax pair wants e = -1/6.
inline Float50 airy_wave(const Float50& zeta, const Float50& lambda, double c1, double c2,
                         const Float50& e) {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Float50 w = boost::math::cbrt(9 / (lambda * lambda)) * (Float50(1) / 4 + lambda * zeta * zeta);
  const AiryPair a = airy_series(w);
  return pow(lambda, e) * sqrt(zeta) * (c1 * a.ai + c2 * a.bi);
}

struct LaxResidual {
  double zeta = 0;
  double lambda = 0;
  double residual1 = 0;
  double residual2 = 0;
};

/// Relative residuals of Psi_zz + V0 Psi - lambda Psi and of
/// Psi_lambda - 1/2 (z/lambda - P/lambda^2) Psi_z + 1/4 (1/lambda - P'/lambda^2) Psi,
/// with P = zeta, by central differences in 50-digit arithmetic.
inline LaxResidual lax_residuals(double zeta, double lambda, double c1, double c2,
                                 const Rational& exponent = Rational(-1, 6)) {
  using boost::multiprecision::abs;
  if (!(zeta > 0)) throw DomainError("numeric Lax check needs zeta > 0");
  if (lambda == 0) throw DomainError("numeric Lax check needs lambda != 0");
  const Float50 e = Float50(exponent.numerator().get_str()) / Float50(exponent.denominator().get_str());
  const Float50 zt = zeta;
  const Float50 la = lambda;
  const Float50 z = 2 * zt * zt * zt;
  auto at = [&](const Float50& zz, const Float50& ll) { return airy_wave(boost::math::cbrt(zz / 2), ll, c1, c2, e); };

  // Ai near w = 11 keeps about 29 of the 50 digits; h = 1e-10 keeps that roundoff
  // well below the O(h^2) truncation after dividing by h^2.
  const Float50 hz = Float50(1e-10) * (1 + abs(z));
  const Float50 hl = Float50(1e-10) * (1 + abs(la));
  const Float50 psi = at(z, la);
  const Float50 zp = at(z + hz, la), zm = at(z - hz, la);
  const Float50 lp = at(z, la + hl), lm = at(z, la - hl);
  const Float50 psi_z = (zp - zm) / (2 * hz);
  const Float50 psi_zz = (zp - 2 * psi + zm) / (hz * hz);
  const Float50 psi_l = (lp - lm) / (2 * hl);

  const Float50 z2 = zt * zt;
  const Float50 v0 = (5 - 36 * z2 * z2) / (144 * z2 * z2 * z2);
  const Float50 P = zt;
  const Float50 dP = 1 / (6 * z2);

  const Float50 r1 = psi_zz + v0 * psi - la * psi;
  const Float50 s1 = abs(psi_zz) + abs(v0 * psi) + abs(la * psi);
  const Float50 k1 = (z / la - P / (la * la)) / 2;
  const Float50 k2 = (1 / la - dP / (la * la)) / 4;
  const Float50 r2 = psi_l - k1 * psi_z + k2 * psi;
  const Float50 s2 = abs(psi_l) + abs(k1 * psi_z) + abs(k2 * psi);

  LaxResidual out;
  out.zeta = zeta;
  out.lambda = lambda;
  out.residual1 = static_cast<double>(abs(r1) / s1);
  out.residual2 = static_cast<double>(abs(r2) / s2);
  return out;
}

/// Both Lax equations for the Ai-only and Bi-only solutions at one (zeta, lambda).
inline Report numeric_lax_check(double zeta, double lambda, double tol,
                                const Rational& exponent = Rational(-1, 6),
                                std::vector<LaxResidual>* rows = nullptr) {
  Report r;
  auto g = [](double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
  };
  const std::string at = "(" + g(zeta) + ", " + g(lambda) + ")";
  for (int which = 0; which < 2; ++which) {
    const char* name = which == 0 ? "lax_ai" : "lax_bi";
    try {
      const LaxResidual res = lax_residuals(zeta, lambda, which == 0 ? 1 : 0, which == 0 ? 0 : 1, exponent);
      if (rows) rows->push_back(res);
      r.add(name, 0, res.residual1 < tol && res.residual2 < tol,
            at + " residuals " + g(res.residual1) + ", " + g(res.residual2));
    } catch (const Error& e) {
      r.add(name, 0, false, at + " " + e.what());
    }
  }
  return r;
}

}  // namespace painleve
