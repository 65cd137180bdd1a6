#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "painleve/laurent.hpp"
#include "painleve/rational_function.hpp"

namespace painleve {

/// The factor zeta^power * exp(e2 zeta^2 + e4 zeta^4), power kept in [0, 1).
template <class K>
struct Gauge {
  Rational power;
  K e2;
  K e4;

  friend bool operator==(const Gauge& a, const Gauge& b) {
    return a.power == b.power && a.e2 == b.e2 && a.e4 == b.e4;
  }
  std::string to_string() const {
    return "zeta^(" + power.to_string() + ") exp((" + e2.to_string() + ") zeta^2 + (" +
           e4.to_string() + ") zeta^4)";
  }
};

/// body(zeta) * zeta^power * exp(e2 zeta^2 + e4 zeta^4).
///
/// Any rational power is accepted; its integer part is moved into the Laurent
/// body so that two equal functions always have equal representations.
template <class K>
class GaugedFunction {
 public:
  GaugedFunction() : body_(Var::zeta), gauge_{Rational(), K(), K()} {}
  GaugedFunction(Laurent<K> body, Rational power, K e2 = K(), K e4 = K())
      : body_(std::move(body)), gauge_{std::move(power), std::move(e2), std::move(e4)} {
    require_same_var(body_.var(), Var::zeta);
    canonicalize();
  }

  static GaugedFunction gauge_only(const Rational& power, const K& e2, const K& e4 = K()) {
    return GaugedFunction(Laurent<K>::constant(Var::zeta, K(1)), power, e2, e4);
  }

  const Laurent<K>& body() const { return body_; }
  const Gauge<K>& gauge() const { return gauge_; }
  const Rational& power() const { return gauge_.power; }
  const K& e2() const { return gauge_.e2; }
  const K& e4() const { return gauge_.e4; }
  bool is_zero() const { return body_.is_zero(); }

  /// Same function with a new body; the gauge is left untouched.
  GaugedFunction with_body(Laurent<K> b) const {
    GaugedFunction out = *this;
    out.body_ = std::move(b);
    return out;
  }

  friend GaugedFunction operator+(const GaugedFunction& a, const GaugedFunction& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    require_same_gauge(a, b);
    return a.with_body(a.body_ + b.body_);
  }
  friend GaugedFunction operator-(const GaugedFunction& a, const GaugedFunction& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    require_same_gauge(a, b);
    return a.with_body(a.body_ - b.body_);
  }
  friend GaugedFunction operator-(const GaugedFunction& a) { return a.with_body(-a.body_); }
  friend GaugedFunction operator*(const GaugedFunction& a, const GaugedFunction& b) {
    return GaugedFunction(a.body_ * b.body_, a.gauge_.power + b.gauge_.power,
                          a.gauge_.e2 + b.gauge_.e2, a.gauge_.e4 + b.gauge_.e4);
  }
  friend GaugedFunction operator*(const GaugedFunction& a, const Laurent<K>& l) {
    return a.with_body(a.body_ * l);
  }
  friend GaugedFunction operator*(const Laurent<K>& l, const GaugedFunction& a) { return a * l; }
  friend GaugedFunction operator*(const GaugedFunction& a, const K& k) {
    return a.with_body(a.body_ * k);
  }
  friend GaugedFunction operator*(const K& k, const GaugedFunction& a) { return a * k; }

  friend bool operator==(const GaugedFunction& a, const GaugedFunction& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.body_ == b.body_ && a.gauge_ == b.gauge_;
  }

  GaugedFunction pow(int n) const {
    if (n < 0) throw DomainError("negative power of a gauged function");
    GaugedFunction out = gauge_only(Rational(), K());
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  /// Logarithmic z-derivative of the gauge factor alone, as a Laurent polynomial.
  Laurent<K> gauge_log_derivative() const {
    // d/dz zeta^p = (p/6) zeta^(p-3); exp(e2 zeta^2) gives e2/(3 zeta); exp(e4 zeta^4) gives 2 e4 zeta/3.
    Laurent<K> out(Var::zeta);
    if (!gauge_.power.is_zero())
      out += Laurent<K>::monomial(Var::zeta, -3, K(gauge_.power / Rational(6)));
    if (!gauge_.e2.is_zero())
      out += Laurent<K>::monomial(Var::zeta, -1, gauge_.e2 * K(Rational(1, 3)));
    if (!gauge_.e4.is_zero())
      out += Laurent<K>::monomial(Var::zeta, 1, gauge_.e4 * K(Rational(2, 3)));
    return out;
  }

  /// f'/f as a rational function of zeta.
  RationalFunction<K> log_derivative() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction<K>(d_dz(body_)) / RationalFunction<K>(body_) +
           RationalFunction<K>(gauge_log_derivative());
  }

  template <class T>
  T evaluate(const T& zeta) const {
    using std::exp;
    using std::pow;
    const T b = body_.template evaluate<T>(zeta);
    const T z2 = zeta * zeta;
    return b * pow(zeta, T(gauge_.power.to_double())) *
           exp(T(gauge_.e2.to_double()) * z2 + T(gauge_.e4.to_double()) * z2 * z2);
  }

  std::string to_string() const {
    return "[" + body_.to_string() + "] * " + gauge_.to_string();
  }
  friend std::ostream& operator<<(std::ostream& os, const GaugedFunction& g) {
    return os << g.to_string();
  }

 private:
  static void require_same_gauge(const GaugedFunction& a, const GaugedFunction& b) {
    if (!(a.gauge_ == b.gauge_))
      throw GaugeMismatch("gauges differ: " + a.gauge_.to_string() + " vs " + b.gauge_.to_string());
  }

  void canonicalize() {
    // floor of the power moves into the body.
    const mpz_class& num = gauge_.power.raw().get_num();
    const mpz_class& den = gauge_.power.raw().get_den();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (fl != 0) {
      body_ = body_.shifted(static_cast<int>(fl.get_si()));
      gauge_.power = gauge_.power - Rational(fl);
    }
  }

  Laurent<K> body_;
  Gauge<K> gauge_;
};

/// z-derivative by the product rule on body and gauge.
template <class K>
GaugedFunction<K> d_dz(const GaugedFunction<K>& f) {
  if (f.is_zero()) return f;
  return f.with_body(d_dz(f.body()) + f.body() * f.gauge_log_derivative());
}

/// A quotient num/den of gauged functions, e.g. theta_{n+1}/theta_n.
template <class K>
struct GaugedQuotient {
  GaugedFunction<K> num;
  GaugedFunction<K> den;

  /// Rational-function part and combined gauge of num/den.
  std::pair<RationalFunction<K>, Gauge<K>> reduced() const {
    if (den.is_zero()) throw DivisionByZero();
    // Flip a negative power sign by moving one zeta into the rational part.
    Rational p = num.power() - den.power();
    RationalFunction<K> body = RationalFunction<K>(num.body()) / RationalFunction<K>(den.body());
    if (p.sign() < 0) {
      p = p + Rational(1);
      body = body.shifted(-1);
    }
    return {body, Gauge<K>{p, num.e2() - den.e2(), num.e4() - den.e4()}};
  }

  /// Cross-multiplied equality with another quotient.
  bool equals(const GaugedQuotient& o) const { return num * o.den == o.num * den; }
};

}  // namespace painleve
