#pragma once

#include <string>
#include <vector>

#include "painleve/polynomial.hpp"
#include "painleve/rational_function.hpp"
#include "painleve/report.hpp"
#include "painleve/wronskian.hpp"

namespace painleve {

/// Adler-Moser Jordan chain psi_k'' = psi_{k-1} in x for fixed constants c_2..c_m,
/// together with the Wronskians theta_k = Wr(psi_1..psi_k).
class AMChain {
 public:
  /// constants[i] is c_{i+2}. Everything up to k = m is built here.
  explicit AMChain(std::vector<Rational> constants) : c_(std::move(constants)) {
    const int m = max_k();
    psi_.push_back(ZPoly(Var::x));
    for (int k = 1; k <= m; ++k) psi_.push_back(build_psi(k));
    theta_.push_back(ZPoly::constant(Var::x, Rational(1)));
    for (int k = 1; k <= m; ++k)
      theta_.push_back(wronskian<Rational>(std::vector<ZPoly>(psi_.begin() + 1, psi_.begin() + k + 1)));
  }

  /// Largest k for which the constants determine psi_k.
  int max_k() const { return static_cast<int>(c_.size()) + 1; }
  const std::vector<Rational>& constants() const { return c_; }
  /// c_i for i >= 2.
  const Rational& c(int i) const { return c_.at(static_cast<std::size_t>(i - 2)); }

  const ZPoly& psi(int k) const {
    if (k < 0) throw DomainError("psi index must be non-negative");
    if (k > max_k()) throw DomainError("missing constants for psi_" + std::to_string(k));
    return psi_[static_cast<std::size_t>(k)];
  }

  /// theta_{-1} = theta_0 = 1.
  ZPoly theta(int k) const {
    if (k < -1) throw DomainError("theta index must be >= -1");
    if (k == -1) return ZPoly::constant(Var::x, Rational(1));
    if (k > max_k()) throw DomainError("missing constants for theta_" + std::to_string(k));
    return theta_[static_cast<std::size_t>(k)];
  }

 private:
  ZPoly build_psi(int k) const {
    std::vector<Rational> out(static_cast<std::size_t>(2 * k));
    out[static_cast<std::size_t>(2 * k - 1)] = factorial(2 * k - 1).inverse();
    for (int i = 0; i <= k - 2; ++i) out[static_cast<std::size_t>(2 * i)] = c(k - i) / factorial(2 * i);
    return ZPoly(Var::x, std::move(out));
  }

  std::vector<Rational> c_;
  std::vector<ZPoly> psi_;
  std::vector<ZPoly> theta_;
};

/// 2 (log f)'' in f's own variable.
inline RatFn log_second_derivative(const ZPoly& f) {
  const ZPoly d1 = f.derivative();
  const ZPoly num = (f.derivative().derivative() * f - d1 * d1) * Rational(2);
  return RatFn(num, f * f);
}

/// V_k = 2 (log theta_k)''.
inline RatFn kdv_potential(int k, const AMChain& chain) {
  return log_second_derivative(chain.theta(k));
}

/// Coefficient of lambda^k in exp(z lambda - 4/3 lambda^3).
inline ZPoly schur_p(int k) {
  if (k < 0) return ZPoly(Var::z);
  std::vector<Rational> out(static_cast<std::size_t>(k) + 1);
  for (int j = 0; 3 * j <= k; ++j)
    out[static_cast<std::size_t>(k - 3 * j)] =
        Rational(-4, 3).pow(j) / (factorial(j) * factorial(k - 3 * j));
  return ZPoly(Var::z, std::move(out));
}

/// Chain constants c_2..c_n of the similarity reduction.
///
/// p_{2k-1} is reduced modulo psi_1..psi_{k-1}; what is left has the psi_k shape
/// and its constant term is c_k. This gives c_2 = -4/3, c_3 = c_4 = 0, but
/// c_5 = 64/81, so setting every c_i with i > 2 to zero is only right for n <= 4.
inline std::vector<Rational> yv_constants(int n) {
  std::vector<Rational> c;
  std::vector<ZPoly> psi{ZPoly(Var::x)};
  for (int k = 1; k <= n; ++k) {
    ZPoly r = schur_p(2 * k - 1).with_var(Var::x);
    for (int j = k - 1; j >= 1; --j) {
      const Rational t = r.coeff(2 * j - 1);
      if (!t.is_zero()) r -= psi[static_cast<std::size_t>(j)] * (t * factorial(2 * j - 1));
    }
    if (k >= 2) c.push_back(r.coeff(0));
    // Whatever remains must be exactly psi_k for these constants.
    const AMChain chain(c);
    if (!(chain.psi(k) == r)) throw IntegrityError("Schur reduction left a non-chain remainder");
    psi.push_back(r);
  }
  return c;
}

/// Yablonskii-Vorob'ev polynomial: theta_n in z for the similarity-reduction constants.
inline ZPoly yv_polynomial(int n) {
  if (n < 0) throw DomainError("yv_polynomial needs n >= 0");
  return AMChain(yv_constants(n)).theta(n).with_var(Var::z);
}

/// Polynomial part of the Kajiwara-Ohta determinant: Wr(p_1, p_3, ..., p_{2n-1}) in z.
inline ZPoly ko_tau(int n) {
  if (n < 0) throw DomainError("ko_tau needs n >= 0");
  std::vector<ZPoly> entries;
  for (int i = 1; i <= n; ++i) entries.push_back(schur_p(2 * i - 1));
  return wronskian<Rational>(entries, Var::z);
}

/// Tau polynomial for parameter ell = m + 1/2 (any integer m); tau_{-ell} = tau_ell.
inline ZPoly tau_poly_half(int m) {
  const int n = m >= 0 ? m : -m - 1;
  return yv_polynomial(n);
}

struct PiiSolution {
  int alpha = 0;
  RatFn q{Var::z};
  RatFn p{Var::z};
  ZPoly tau{Var::z};
};

inline RatFn log_derivative(const ZPoly& f) { return RatFn(f.derivative(), f); }

/// Rational solution q of PII with integer parameter alpha, and p = -q' - q^2 - z/2.
inline PiiSolution pii_rational(int alpha) {
  PiiSolution out;
  out.alpha = alpha;
  const int n = alpha >= 0 ? alpha : -alpha;
  RatFn q = n == 0 ? RatFn(Var::z)
                   : log_derivative(yv_polynomial(n - 1)) - log_derivative(yv_polynomial(n));
  out.q = alpha >= 0 ? q : -q;
  const RatFn z = RatFn::variable(Var::z);
  out.p = -out.q.derivative() - out.q * out.q - z * Rational(1, 2);
  out.tau = tau_poly_half(alpha);
  return out;
}

/// PXXXIV solution for ell = n + 1/2, n >= 0: 2 (log theta_n)'' - z/2.
inline RatFn p34_solution(int n) {
  if (n < 0) throw DomainError("p34_solution covers ell = n + 1/2 with n >= 0");
  return log_second_derivative(yv_polynomial(n)) - RatFn::variable(Var::z) * Rational(1, 2);
}

/// q'' - 2 q^3 - z q - alpha.
inline RatFn pii_residual(const RatFn& q, const Rational& alpha) {
  const RatFn z = RatFn::variable(Var::z);
  return q.derivative().derivative() - q * q * q * Rational(2) - z * q -
         RatFn::constant(Var::z, alpha);
}

/// p'' - p'^2/(2p) + 2p^2 + z p + ell^2/(2p).
inline RatFn p34_residual(const RatFn& p, const Rational& ell) {
  const RatFn z = RatFn::variable(Var::z);
  const RatFn d1 = p.derivative();
  const RatFn inv2p = (p * Rational(2)).inverse();
  return d1.derivative() - d1 * d1 * inv2p + p * p * Rational(2) + z * p +
         RatFn::constant(Var::z, ell * ell) * inv2p;
}

/// theta_{k+1}' theta_{k-1} - theta_{k+1} theta_{k-1}' - theta_k^2.
inline ZPoly am_theta_defect(const ZPoly& prev, const ZPoly& cur, const ZPoly& next) {
  return next.derivative() * prev - next * prev.derivative() - cur * cur;
}

/// Toda form C theta_{n-1} theta_{n+1} - 2 (theta theta'' - theta'^2) + (z/2) theta^2, with C = -ell.
inline ZPoly todal_defect(const ZPoly& prev, const ZPoly& cur, const ZPoly& next,
                          const Rational& ell) {
  const ZPoly d1 = cur.derivative();
  const ZPoly half_z = ZPoly::monomial(cur.var(), 1, Rational(1, 2));
  return prev * next * (-ell) - (cur * cur.derivative().derivative() - d1 * d1) * Rational(2) +
         half_z * cur * cur;
}

/// Exact checks on the Painleve II side.
/// `chains` are tested against the Burchnall-Chaundy recurrence up to k_max;
/// the similarity reduction is tested up to n_max (ell = n + 1/2).
inline Report verify_am_identities(int k_max, const std::vector<AMChain>& chains, int n_max) {
  Report r;
  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    const AMChain& ch = chains[ci];
    const int kk = std::min(k_max, ch.max_k() - 1);
    for (int k = 1; k <= kk; ++k) {
      r.run("am_theta_bc[chain " + std::to_string(ci) + "]", k, [&] {
        return am_theta_defect(ch.theta(k - 1), ch.theta(k), ch.theta(k + 1)).is_zero();
      });
    }
    for (int k = 1; k <= ch.max_k(); ++k) {
      r.run("am_jordan_chain[chain " + std::to_string(ci) + "]", k, [&] {
        return ch.psi(k).derivative().derivative() == ch.psi(k - 1);
      });
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    const Rational ell = Rational(2 * n + 1, 2);
    const ZPoly prev = n == 0 ? ZPoly::constant(Var::z, Rational(1)) : yv_polynomial(n - 1);
    const ZPoly cur = yv_polynomial(n);
    const ZPoly next = yv_polynomial(n + 1);
    r.run("bcmod", n, [&] { return am_theta_defect(prev, cur, next).is_zero(); });
    r.run("todal", n, [&] { return todal_defect(prev, cur, next, ell).is_zero(); });
    r.run("ko_tau_equals_yv", n, [&] { return ko_tau(n) == cur; });
    r.run("p34", n, [&] { return p34_residual(p34_solution(n), ell).is_zero(); });
  }
  for (int a = -n_max; a <= n_max; ++a) {
    r.run("pii", a, [&] { return pii_residual(pii_rational(a).q, Rational(a)).is_zero(); });
    if (a >= 0)
      r.run("miura_matches_p34", a, [&] { return pii_rational(a).p == p34_solution(a); });
  }
  return r;
}

}  // namespace painleve
