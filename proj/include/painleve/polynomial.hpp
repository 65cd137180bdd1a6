#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "painleve/errors.hpp"
#include "painleve/number_field.hpp"
#include "painleve/rational.hpp"

namespace painleve {

/// Independent variable carried by every polynomial; mixed-variable arithmetic is refused.
enum class Var { x, z, s, zeta };

inline std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::z: return "z";
    case Var::s: return "s";
    case Var::zeta: return "zeta";
  }
  return "?";
}

inline Var parse_var(std::string_view name) {
  if (name == "x") return Var::x;
  if (name == "z") return Var::z;
  if (name == "s") return Var::s;
  if (name == "zeta") return Var::zeta;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

inline void require_same_var(Var a, Var b) {
  if (a != b)
    throw VariableMismatch("mixed-variable arithmetic: " + std::string(var_name(a)) + " vs " +
                           std::string(var_name(b)));
}

/// Dense univariate polynomial with ascending coefficients over a field K.
template <class K>
class Polynomial {
 public:
  using Scalar = K;

  explicit Polynomial(Var v = Var::x) : var_(v) {}
  Polynomial(Var v, std::vector<K> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }
  Polynomial(Var v, std::initializer_list<K> coeffs) : var_(v), c_(coeffs) { trim(); }

  static Polynomial constant(Var v, const K& k) { return Polynomial(v, std::vector<K>{k}); }
  static Polynomial monomial(Var v, int power, const K& k = K(1)) {
    std::vector<K> c(static_cast<std::size_t>(power) + 1);
    c.back() = k;
    return Polynomial(v, std::move(c));
  }

  Var var() const { return var_; }
  const std::vector<K>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& leading() const { return c_.back(); }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K();
    return c_[static_cast<std::size_t>(i)];
  }
  /// Lowest power with a non-zero coefficient; 0 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
  }

  Polynomial with_var(Var v) const { return Polynomial(v, c_); }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_var(var_, o.var_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_var(var_, o.var_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const K& k) {
    if (k.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_)
      if (!x.is_zero()) x *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const K& k) { return a *= k; }
  friend Polynomial operator*(const K& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_var(a.var_, b.var_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<K> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(a.var_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  /// Quotient and remainder of Euclidean division.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    require_same_var(var_, d.var_);
    if (d.is_zero()) throw DivisionByZero();
    if (degree() < d.degree()) return {Polynomial(var_), *this};
    std::vector<K> rem = c_;
    std::vector<K> quo(c_.size() - d.c_.size() + 1);
    const K inv_lead = K(1) / d.leading();
    const bool monic = d.leading() == K(1);
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k + d.degree());
      if (rem[top].is_zero()) continue;
      K q = monic ? rem[top] : rem[top] * inv_lead;
      for (std::size_t j = 0; j < d.c_.size(); ++j) {
        if (d.c_[j].is_zero()) continue;
        rem[static_cast<std::size_t>(k) + j] -= q * d.c_[j];
      }
      quo[static_cast<std::size_t>(k)] = std::move(q);
    }
    return {Polynomial(var_, std::move(quo)), Polynomial(var_, std::move(rem))};
  }

  /// Division that must be exact; a remainder is an integrity failure.
  Polynomial exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw IntegrityError("non-exact polynomial division");
    return q;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / leading());
  }

  /// Derivative with respect to the polynomial's own variable.
  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(var_);
    std::vector<K> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      out[i - 1] = c_[i] * K(static_cast<long>(i));
    }
    return Polynomial(var_, std::move(out));
  }

  template <class T>
  T evaluate(const T& at) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + cast(*it, at);
    return acc;
  }

  template <class T>
  static T cast(const K& k, const T&) {
    if constexpr (std::is_same_v<T, double> && requires { k.to_double(); })
      return k.to_double();
    else
      return T(k);
  }

  /// Substitutes var -> scale * newvar^power.
  Polynomial substitute_monomial(Var new_var, const K& scale, int power) const {
    if (is_zero()) return Polynomial(new_var);
    std::vector<K> out(static_cast<std::size_t>(degree() * power) + 1);
    K factor(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) out[i * static_cast<std::size_t>(power)] = c_[i] * factor;
      factor *= scale;
    }
    return Polynomial(new_var, std::move(out));
  }

  /// True when only even powers occur.
  bool is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  /// p(v) = q(v^2) for even p; returns q in `new_var`.
  Polynomial halve_even(Var new_var) const {
    if (!is_even()) throw IntegrityError("polynomial has odd powers");
    std::vector<K> out((c_.size() + 1) / 2);
    for (std::size_t i = 0; i < c_.size(); i += 2) out[i / 2] = c_[i];
    return Polynomial(new_var, std::move(out));
  }

  /// Multiplication by var^k, k >= 0.
  Polynomial shift(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> out(static_cast<std::size_t>(k), K());
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(var_, std::move(out));
  }

  /// Division by var^k; requires valuation() >= k.
  Polynomial unshift(int k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw IntegrityError("unshift below valuation");
    return Polynomial(var_, std::vector<K>(c_.begin() + k, c_.end()));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const K& k = c_[static_cast<std::size_t>(i)];
      if (k.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + k.to_string() + ")";
      if (i > 0) s += "*" + std::string(var_name(var_));
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Var var_;
  std::vector<K> c_;
};

namespace detail {

using ZVec = std::vector<mpz_class>;

inline void trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void make_primitive(ZVec& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return;
  if (v.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Primitive integer polynomial proportional to p.
inline ZVec to_primitive(const std::vector<Rational>& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  ZVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[i].raw().get_num() * (l / p[i].raw().get_den());
  }
  trim(out);
  make_primitive(out);
  return out;
}

/// a <- primitive part of the pseudo-remainder of a by b.
inline void pseudo_rem(ZVec& a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g;
    const mpz_class fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= fb * b[j];
    trim(a);
    if (!a.empty()) make_primitive(a);
  }
}

/// Greatest common divisor of primitive integer polynomials by the primitive remainder sequence.
inline ZVec primitive_gcd(ZVec a, ZVec b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    pseudo_rem(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace detail

/// Monic greatest common divisor over the field K.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  require_same_var(a.var(), b.var());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Powers of the variable are split off first; they are common in this code base.
  const int va = a.valuation();
  const int vb = b.valuation();
  const int common_shift = std::min(va, vb);
  a = a.unshift(va).monic();
  b = b.unshift(vb).monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial<K>::monomial(a.var(), common_shift);
  if constexpr (std::is_same_v<K, Rational>) {
    detail::ZVec g = detail::primitive_gcd(detail::to_primitive(a.coeffs()), detail::to_primitive(b.coeffs()));
    std::vector<Rational> out;
    out.reserve(g.size());
    for (auto& c : g) out.emplace_back(Rational(c, g.back()));
    return Polynomial<K>(a.var(), std::move(out)).shift(common_shift);
  } else {
    // Number-field inputs that are rational after scaling take the integer route.
    auto all_rational = [](const Polynomial<K>& p) {
      for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
      return true;
    };
    if (all_rational(a) && all_rational(b)) {
      auto down = [](const Polynomial<K>& p) {
        std::vector<Rational> c;
        for (const auto& x : p.coeffs()) c.push_back(x.to_rational());
        return Polynomial<Rational>(p.var(), std::move(c));
      };
      const Polynomial<Rational> g = gcd(down(a), down(b));
      std::vector<K> out;
      for (const auto& c : g.coeffs()) out.emplace_back(c);
      return Polynomial<K>(a.var(), std::move(out)).shift(common_shift);
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic().shift(common_shift);
  }
}

/// Maps every coefficient through f, e.g. to change the coefficient field.
template <class To, class From, class F>
Polynomial<To> map_coeffs(const Polynomial<From>& p, F&& f) {
  std::vector<To> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(f(c));
  return Polynomial<To>(p.var(), std::move(out));
}

inline Polynomial<NFScalar> to_nf(const Polynomial<Rational>& p) {
  return map_coeffs<NFScalar>(p, [](const Rational& r) { return NFScalar(r); });
}

/// Converts to rational coefficients, raising IrrationalResidue when impossible.
inline Polynomial<Rational> to_rational(const Polynomial<NFScalar>& p) {
  return map_coeffs<Rational>(p, [](const NFScalar& x) { return x.to_rational(); });
}

inline Polynomial<Rational> to_rational(const Polynomial<Rational>& p) { return p; }

/// True when every coefficient is an integer.
inline bool has_integer_coeffs(const Polynomial<Rational>& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& r) { return r.is_integer(); });
}

}  // namespace painleve
