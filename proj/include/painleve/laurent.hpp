#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "painleve/polynomial.hpp"

namespace painleve {

/// Laurent polynomial var^lowest * (c0 + c1 var + ...), with c0 != 0 unless zero.
template <class K>
class Laurent {
 public:
  explicit Laurent(Var v = Var::zeta) : body_(v) {}
  Laurent(int lowest, Polynomial<K> body) : body_(std::move(body)), low_(lowest) { normalize(); }
  Laurent(Var v, int lowest, std::vector<K> coeffs)
      : body_(v, std::move(coeffs)), low_(lowest) {
    normalize();
  }
  explicit Laurent(const Polynomial<K>& p) : body_(p), low_(0) { normalize(); }

  static Laurent constant(Var v, const K& k) { return Laurent(v, 0, {k}); }
  static Laurent monomial(Var v, int power, const K& k = K(1)) { return Laurent(v, power, {k}); }

  Var var() const { return body_.var(); }
  int lowest() const { return low_; }
  int highest() const { return low_ + body_.degree(); }
  /// Coefficients starting at var^lowest().
  const std::vector<K>& coeffs() const { return body_.coeffs(); }
  const Polynomial<K>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  K coeff(int power) const { return body_.coeff(power - low_); }

  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  Polynomial<K> to_polynomial() const {
    if (!is_polynomial()) throw IntegrityError("Laurent polynomial has negative powers");
    return body_.shift(is_zero() ? 0 : low_);
  }

  Laurent shifted(int k) const {
    Laurent out = *this;
    if (!out.is_zero()) out.low_ += k;
    return out;
  }

  Laurent& operator+=(const Laurent& o) { return *this = add(*this, o, false); }
  Laurent& operator-=(const Laurent& o) { return *this = add(*this, o, true); }
  Laurent& operator*=(const K& k) {
    body_ *= k;
    normalize();
    return *this;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return add(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return add(a, b, true); }
  friend Laurent operator-(const Laurent& a) { return Laurent(a.low_, -a.body_); }
  friend Laurent operator*(Laurent a, const K& k) { return a *= k; }
  friend Laurent operator*(const K& k, Laurent a) { return a *= k; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    require_same_var(a.var(), b.var());
    if (a.is_zero() || b.is_zero()) return Laurent(a.var());
    return Laurent(a.low_ + b.low_, a.body_ * b.body_);
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.body_ == b.body_ && a.low_ == b.low_;
  }

  /// Derivative with respect to the Laurent variable itself.
  Laurent derivative() const {
    if (is_zero()) return *this;
    // d/dv [v^L p] = v^(L-1) (L p + v p')
    Polynomial<K> inner = body_ * K(static_cast<long>(low_)) + body_.derivative().shift(1);
    return Laurent(low_ - 1, std::move(inner));
  }

  /// Only even powers present.
  bool is_even() const {
    if (is_zero()) return true;
    return (low_ % 2 == 0) && body_.is_even();
  }

  template <class T>
  T evaluate(const T& at) const {
    T base = body_.template evaluate<T>(at);
    T p = T(1);
    if (low_ >= 0) {
      for (int i = 0; i < low_; ++i) p = p * at;
      return base * p;
    }
    for (int i = 0; i < -low_; ++i) p = p * at;
    return base / p;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    const auto& c = body_.coeffs();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      if (c[static_cast<std::size_t>(i)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c[static_cast<std::size_t>(i)].to_string() + ")";
      const int e = low_ + i;
      if (e != 0) s += "*" + std::string(var_name(var())) + "^" + std::to_string(e);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& l) {
    return os << l.to_string();
  }

 private:
  static Laurent add(const Laurent& a, const Laurent& b, bool subtract) {
    require_same_var(a.var(), b.var());
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const int low = std::min(a.low_, b.low_);
    Polynomial<K> pa = a.body_.shift(a.low_ - low);
    Polynomial<K> pb = b.body_.shift(b.low_ - low);
    return Laurent(low, subtract ? pa - pb : pa + pb);
  }

  void normalize() {
    if (body_.is_zero()) {
      low_ = 0;
      return;
    }
    const int v = body_.valuation();
    if (v > 0) {
      body_ = body_.unshift(v);
      low_ += v;
    }
  }

  Polynomial<K> body_;
  int low_ = 0;
};

/// z-derivative of a function of zeta, where z = 2 zeta^3: d/dz = (1/(6 zeta^2)) d/dzeta.
template <class K>
Laurent<K> d_dz(const Laurent<K>& f) {
  if (f.var() == Var::z) return f.derivative();
  if (f.var() != Var::zeta) throw VariableMismatch("d_dz needs a z- or zeta-valued function");
  return (f.derivative() * K(Rational(1, 6))).shifted(-2);
}

template <class K>
Polynomial<K> d_dz(const Polynomial<K>& f) {
  if (f.var() != Var::z) throw VariableMismatch("d_dz on a polynomial needs variable z");
  return f.derivative();
}

inline Laurent<NFScalar> to_nf(const Laurent<Rational>& l) {
  return Laurent<NFScalar>(l.lowest(), to_nf(l.body()));
}

inline Laurent<Rational> to_rational(const Laurent<NFScalar>& l) {
  return Laurent<Rational>(l.lowest(), to_rational(l.body()));
}

}  // namespace painleve
