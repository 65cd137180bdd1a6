#pragma once

#include <ostream>
#include <string>

#include "painleve/laurent.hpp"
#include "painleve/polynomial.hpp"

namespace painleve {

/// Quotient num/den of polynomials in one variable, kept coprime with monic denominator.
template <class K>
class RationalFunction {
 public:
  explicit RationalFunction(Var v = Var::z)
      : num_(v), den_(Polynomial<K>::constant(v, K(1))) {}
  RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_var(num_.var(), den_.var());
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
  }
  explicit RationalFunction(const Polynomial<K>& p)
      : num_(p), den_(Polynomial<K>::constant(p.var(), K(1))) {}
  explicit RationalFunction(const Laurent<K>& l) : num_(l.var()), den_(l.var()) {
    if (l.lowest() >= 0) {
      num_ = l.to_polynomial();
      den_ = Polynomial<K>::constant(l.var(), K(1));
    } else {
      num_ = l.body();
      den_ = Polynomial<K>::monomial(l.var(), -l.lowest());
    }
  }

  static RationalFunction constant(Var v, const K& k) {
    return RationalFunction(Polynomial<K>::constant(v, k));
  }
  static RationalFunction variable(Var v) { return RationalFunction(Polynomial<K>::monomial(v, 1)); }

  Var var() const { return num_.var(); }
  const Polynomial<K>& num() const { return num_; }
  const Polynomial<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, false);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b, true);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    require_same_var(a.var(), b.var());
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.var());
    const Polynomial<K> g1 = gcd(a.num_, b.den_);
    const Polynomial<K> g2 = gcd(b.num_, a.den_);
    Polynomial<K> n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    Polynomial<K> d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    return from_coprime(std::move(n), std::move(d));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend RationalFunction operator*(const RationalFunction& a, const K& k) {
    if (k.is_zero()) return RationalFunction(a.var());
    RationalFunction out = a;
    out.num_ *= k;
    return out;
  }
  friend RationalFunction operator*(const K& k, const RationalFunction& a) { return a * k; }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Derivative with respect to the function's own variable.
  RationalFunction derivative() const {
    if (is_zero()) return *this;
    // (n/d)' = (n' d - n d') / d^2, with g = gcd(d, d') pulled out first.
    const Polynomial<K> dd = den_.derivative();
    if (dd.is_zero()) return RationalFunction(num_.derivative() * (K(1) / den_.leading()));
    const Polynomial<K> g = gcd(den_, dd);
    const Polynomial<K> dg = den_.exact_div(g);
    Polynomial<K> n = num_.derivative() * dg - num_ * dd.exact_div(g);
    Polynomial<K> d = dg * den_;
    return RationalFunction(std::move(n), std::move(d));
  }

  /// Multiplication by var^k for any integer k.
  RationalFunction shifted(int k) const {
    if (k >= 0) return RationalFunction(num_.shift(k), den_);
    return RationalFunction(num_, den_.shift(-k));
  }

  template <class T>
  T evaluate(const T& at) const {
    return num_.template evaluate<T>(at) / den_.template evaluate<T>(at);
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << r.to_string();
  }

 private:
  static RationalFunction from_coprime(Polynomial<K> n, Polynomial<K> d) {
    RationalFunction out(n.var());
    const K inv = K(1) / d.leading();
    out.num_ = n * inv;
    out.den_ = d * inv;
    return out;
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    require_same_var(a.var(), b.var());
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) {
      Polynomial<K> n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      return RationalFunction(std::move(n), a.den_);
    }
    const Polynomial<K> g = gcd(a.den_, b.den_);
    const Polynomial<K> da = a.den_.exact_div(g);
    const Polynomial<K> db = b.den_.exact_div(g);
    Polynomial<K> n = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
    if (n.is_zero()) return RationalFunction(a.var());
    // Only factors of g can cancel against the new numerator.
    const Polynomial<K> h = gcd(n, g);
    return from_coprime(n.exact_div(h), (da * b.den_).exact_div(h));
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial<K>::constant(num_.var(), K(1));
      return;
    }
    const Polynomial<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    const K inv = K(1) / den_.leading();
    if (!(den_.leading() == K(1))) {
      num_ *= inv;
      den_ *= inv;
    }
  }

  Polynomial<K> num_;
  Polynomial<K> den_;
};

/// z-derivative; for zeta-valued functions uses d/dz = (1/(6 zeta^2)) d/dzeta.
template <class K>
RationalFunction<K> d_dz(const RationalFunction<K>& f) {
  if (f.var() == Var::z) return f.derivative();
  if (f.var() != Var::zeta) throw VariableMismatch("d_dz needs a z- or zeta-valued function");
  return (f.derivative() * K(Rational(1, 6))).shifted(-2);
}

/// The rational function z expressed in the active variable (z itself, or 2 zeta^3).
template <class K>
RationalFunction<K> z_of(Var v) {
  if (v == Var::z) return RationalFunction<K>::variable(v);
  if (v == Var::zeta) return RationalFunction<K>(Polynomial<K>::monomial(v, 3, K(2)));
  throw VariableMismatch("z is only expressible in z or zeta");
}

using ZPoly = Polynomial<Rational>;
using RatFn = RationalFunction<Rational>;

inline RationalFunction<Rational> to_rational(const RationalFunction<NFScalar>& f) {
  return RationalFunction<Rational>(to_rational(f.num()), to_rational(f.den()));
}

inline RationalFunction<NFScalar> to_nf(const RationalFunction<Rational>& f) {
  return RationalFunction<NFScalar>(to_nf(f.num()), to_nf(f.den()));
}

}  // namespace painleve
