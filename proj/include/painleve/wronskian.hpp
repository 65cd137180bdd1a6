#pragma once

#include <utility>
#include <vector>

#include "painleve/gauged.hpp"
#include "painleve/laurent.hpp"
#include "painleve/polynomial.hpp"
#include "painleve/rational_function.hpp"

namespace painleve {

namespace detail {

template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& a, const Polynomial<K>& b) {
  return a.exact_div(b);
}

template <class K>
RationalFunction<K> exact_quotient(const RationalFunction<K>& a, const RationalFunction<K>& b) {
  return a / b;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain with exact division.
/// Rows are swapped when a pivot vanishes. `one` is the ring unit.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return T(one.var());
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(t) : detail::exact_quotient(t, prev);
      }
    }
    prev = m[k][k];
  }
  T out = std::move(m[n - 1][n - 1]);
  return negate ? -out : out;
}

/// Wronskian of polynomials, differentiating in the polynomial's own variable.
template <class K>
Polynomial<K> wronskian(const std::vector<Polynomial<K>>& f, Var v = Var::x) {
  if (f.empty()) return Polynomial<K>::constant(v, K(1));
  const Var var = f.front().var();
  std::vector<std::vector<Polynomial<K>>> m(f.size());
  m[0] = f;
  for (std::size_t i = 1; i < f.size(); ++i)
    for (const auto& p : m[i - 1]) m[i].push_back(p.derivative());
  return bareiss_determinant(std::move(m), Polynomial<K>::constant(var, K(1)));
}

/// Wronskian of rational functions in their own variable.
template <class K>
RationalFunction<K> wronskian(const std::vector<RationalFunction<K>>& f, Var v = Var::x) {
  if (f.empty()) return RationalFunction<K>::constant(v, K(1));
  const Var var = f.front().var();
  std::vector<std::vector<RationalFunction<K>>> m(f.size());
  m[0] = f;
  for (std::size_t i = 1; i < f.size(); ++i)
    for (const auto& p : m[i - 1]) m[i].push_back(p.derivative());
  return bareiss_determinant(std::move(m), RationalFunction<K>::constant(var, K(1)));
}

/// Wronskian of zeta-Laurent polynomials with z-derivatives.
///
/// Each row is cleared of its lowest zeta power. When every row is then of a
/// single parity (always the case for the even entries W_n), odd rows get one
/// more zeta and the determinant is taken in u = zeta^2, which quarters the work.
template <class K>
Laurent<K> wronskian_z(const std::vector<Laurent<K>>& f) {
  if (f.empty()) return Laurent<K>::constant(Var::zeta, K(1));
  const std::size_t n = f.size();
  std::vector<std::vector<Laurent<K>>> rows(n);
  rows[0] = f;
  for (std::size_t i = 1; i < n; ++i)
    for (const auto& p : rows[i - 1]) rows[i].push_back(d_dz(p));

  long total_shift = 0;
  bool halve = true;
  std::vector<std::vector<Polynomial<K>>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    int lo = 0;
    bool any = false;
    for (const auto& e : rows[i]) {
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.lowest()) : e.lowest();
      any = true;
    }
    if (!any) return Laurent<K>(Var::zeta);
    int parity = -1;
    for (const auto& e : rows[i]) {
      if (e.is_zero()) continue;
      const Laurent<K> s = e.shifted(-lo);
      const bool even = s.is_even();
      const bool odd = s.shifted(1).is_even();
      const int p = even ? 0 : (odd ? 1 : 2);
      if (p == 2 || (parity >= 0 && parity != p)) halve = false;
      parity = p;
    }
    int extra = (halve && parity == 1) ? 1 : 0;
    total_shift += lo - extra;
    for (const auto& e : rows[i]) m[i].push_back(e.shifted(extra - lo).to_polynomial());
  }
  if (halve)
    for (auto& row : m)
      for (auto& p : row) p = p.halve_even(Var::zeta);

  Polynomial<K> det = bareiss_determinant(std::move(m), Polynomial<K>::constant(Var::zeta, K(1)));
  if (halve) det = det.substitute_monomial(Var::zeta, K(1), 2);
  return Laurent<K>(static_cast<int>(total_shift), std::move(det));
}

/// Wronskian of gauged functions sharing one gauge g: Wr(g f_i) = g^n Wr(f_i).
template <class K>
GaugedFunction<K> wronskian_z(const std::vector<GaugedFunction<K>>& f) {
  if (f.empty()) return GaugedFunction<K>::gauge_only(Rational(), K());
  std::vector<Laurent<K>> bodies;
  for (const auto& g : f) {
    if (!(g.gauge() == f.front().gauge()))
      throw GaugeMismatch("Wronskian entries carry different gauges");
    bodies.push_back(g.body());
  }
  const auto& g0 = f.front().gauge();
  const long n = static_cast<long>(f.size());
  return GaugedFunction<K>(wronskian_z(bodies), g0.power * Rational(n), g0.e2 * K(n),
                           g0.e4 * K(n));
}

}  // namespace painleve
