#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "painleve/errors.hpp"
#include "painleve/rational.hpp"

namespace painleve {

/// Element r0 + r1 y + r2 y^2 + r3 y^3 of Q[y]/(y^4 - 3).
///
/// y is the real fourth root of 3, so y^2 is sqrt(3). Every constant on the
/// Painleve III side (sqrt(3), 3^(1/4) and their products) lives here.
class NFScalar {
 public:
  using Coeffs = std::array<Rational, 4>;

  NFScalar() = default;
  NFScalar(const Rational& r) : c_{r, Rational(), Rational(), Rational()} {}  // NOLINT
  NFScalar(long v) : NFScalar(Rational(v)) {}  // NOLINT
  NFScalar(int v) : NFScalar(Rational(v)) {}  // NOLINT
  NFScalar(Rational r0, Rational r1, Rational r2, Rational r3)
      : c_{std::move(r0), std::move(r1), std::move(r2), std::move(r3)} {}

  /// Builds from an arbitrary-degree coefficient list, reducing with y^4 = 3.
  static NFScalar from_unreduced(const std::vector<Rational>& coeffs) {
    NFScalar out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Rational term = coeffs[i];
      for (std::size_t k = i / 4; k > 0; --k) term *= Rational(3);
      out.c_[i % 4] += term;
    }
    return out;
  }

  static NFScalar zero() { return NFScalar(); }
  static NFScalar one() { return NFScalar(Rational(1)); }
  /// 3^(1/4)
  static NFScalar y() { return NFScalar(0, 1, 0, 0); }
  /// sqrt(3)
  static NFScalar sqrt3() { return NFScalar(0, 0, 1, 0); }

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool is_one() const { return is_rational() && c_[0].is_one(); }

  /// r0 when the element is rational, otherwise IrrationalResidue.
  Rational to_rational() const {
    if (!is_rational()) {
      std::vector<std::string> s;
      for (const auto& r : c_) s.push_back(r.to_string());
      throw IrrationalResidue(std::move(s));
    }
    return c_[0];
  }

  /// Real value with y = 3^(1/4).
  double to_double() const {
    const double y = std::pow(3.0, 0.25);
    return c_[0].to_double() + y * (c_[1].to_double() + y * (c_[2].to_double() + y * c_[3].to_double()));
  }

  /// The conjugate obtained by y -> -y.
  NFScalar conjugate_y() const { return NFScalar(c_[0], -c_[1], c_[2], -c_[3]); }

  NFScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return NFScalar(c_[0].inverse());
    // x(y) x(-y) = a + b y^2, then (a + b y^2)(a - b y^2) = a^2 - 3 b^2.
    const NFScalar conj = conjugate_y();
    const NFScalar prod = *this * conj;
    const Rational& a = prod.c_[0];
    const Rational& b = prod.c_[2];
    const Rational norm = a * a - Rational(3) * b * b;
    NFScalar partner(a, Rational(), -b, Rational());
    NFScalar out = conj * partner;
    const Rational inv = norm.inverse();
    for (auto& r : out.c_) r *= inv;
    return out;
  }

  NFScalar pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    NFScalar out(1);
    NFScalar base = *this;
    while (e) {
      if (e & 1) out *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return out;
  }

  NFScalar& operator+=(const NFScalar& o) {
    for (int i = 0; i < 4; ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
  }
  NFScalar& operator-=(const NFScalar& o) {
    for (int i = 0; i < 4; ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
  }
  NFScalar& operator*=(const NFScalar& o) {
    if (o.is_rational()) {
      if (o.c_[0].is_one()) return *this;
      for (auto& r : c_)
        if (!r.is_zero()) r *= o.c_[0];
      return *this;
    }
    if (is_rational()) {
      const Rational s = c_[0];
      *this = o;
      for (auto& r : c_)
        if (!r.is_zero()) r *= s;
      return *this;
    }
    Coeffs out{};
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.c_[j].is_zero()) continue;
        Rational t = c_[i] * o.c_[j];
        if (i + j >= 4) t *= Rational(3);
        out[(i + j) % 4] += t;
      }
    }
    c_ = std::move(out);
    return *this;
  }
  NFScalar& operator/=(const NFScalar& o) { return *this *= o.inverse(); }

  friend NFScalar operator+(NFScalar a, const NFScalar& b) { return a += b; }
  friend NFScalar operator-(NFScalar a, const NFScalar& b) { return a -= b; }
  friend NFScalar operator*(NFScalar a, const NFScalar& b) { return a *= b; }
  friend NFScalar operator/(NFScalar a, const NFScalar& b) { return a /= b; }
  friend NFScalar operator-(const NFScalar& a) {
    return NFScalar(-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]);
  }

  friend bool operator==(const NFScalar& a, const NFScalar& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ", ";
      s += c_[i].to_string();
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const NFScalar& x) {
    return os << x.to_string();
  }

 private:
  Coeffs c_{};
};

/// Coefficient-field traits used by the polynomial templates.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static Rational to_rational(const Rational& r) { return r; }
  static bool is_rational(const Rational&) { return true; }
};

template <>
struct FieldTraits<NFScalar> {
  static NFScalar from_rational(const Rational& r) { return NFScalar(r); }
  static Rational to_rational(const NFScalar& x) { return x.to_rational(); }
  static bool is_rational(const NFScalar& x) { return x.is_rational(); }
};

}  // namespace painleve
