#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "painleve/errors.hpp"

namespace painleve {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& v) : q_(v) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" or a terminating decimal such as "-0.25".
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    const auto slash = s.find('/');
    const auto dot = s.find('.');
    mpz_class num, den(1);
    auto read = [&](const std::string& part, mpz_class& out) {
      if (part.empty() || out.set_str(part, 10) != 0)
        throw DomainError("malformed rational literal '" + s + "'");
    };
    if (dot != std::string::npos && slash == std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("malformed rational literal '" + s + "'");
      std::string whole = s.substr(0, dot);
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      read(whole + frac, num);
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else if (slash == std::string::npos) {
      read(s, num);
    } else {
      read(s.substr(0, slash), num);
      read(s.substr(slash + 1), den);
    }
    return Rational(num, den);
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Decimal rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = abs(q_.get_num()) * scale * 2 + q_.get_den();
    mpz_class d = q_.get_den() * 2;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::string s = r.get_str();
    if (digits > 0) {
      if (s.size() <= static_cast<std::size_t>(digits))
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
      s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && r != 0) s.insert(0, "-");
    return s;
  }

  double to_double() const { return q_.get_d(); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r), Canonical{});
  }

  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational out(1);
    Rational base = *this;
    while (e) {
      if (e & 1) out *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return out;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r = a;
    mpq_neg(r.q_.get_mpq_t(), r.q_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct Canonical {};
  Rational(mpq_class q, Canonical) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// Generalized binomial coefficient binom(alpha, j) for rational alpha.
inline Rational binomial(const Rational& alpha, int j) {
  Rational out(1);
  for (int i = 0; i < j; ++i) out *= (alpha - Rational(i)) / Rational(i + 1);
  return out;
}

}  // namespace painleve
