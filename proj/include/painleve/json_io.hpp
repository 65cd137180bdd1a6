#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/gauged.hpp"
#include "painleve/laurent.hpp"
#include "painleve/polynomial.hpp"
#include "painleve/rational_function.hpp"

namespace painleve {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const NFScalar& x) {
  json a = json::array();
  for (const auto& r : x.coeffs()) a.push_back(r.to_string());
  return a;
}

template <class K>
K scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
  if (!j.is_string()) throw DomainError("rational must be a string");
  return Rational::parse(j.get<std::string>());
}

template <>
inline NFScalar scalar_from_json<NFScalar>(const json& j) {
  if (j.is_string()) return NFScalar(Rational::parse(j.get<std::string>()));
  if (!j.is_array() || j.size() != 4) throw DomainError("number-field scalar must be a 4-array");
  return NFScalar(scalar_from_json<Rational>(j[0]), scalar_from_json<Rational>(j[1]),
                  scalar_from_json<Rational>(j[2]), scalar_from_json<Rational>(j[3]));
}

template <class K>
json to_json(const Polynomial<K>& p) {
  json c = json::array();
  for (const auto& k : p.coeffs()) c.push_back(to_json(k));
  return {{"var", std::string(var_name(p.var()))}, {"lowest", 0}, {"coeffs", std::move(c)}};
}

template <class K>
json to_json(const Laurent<K>& l) {
  json c = json::array();
  for (const auto& k : l.coeffs()) c.push_back(to_json(k));
  return {{"var", std::string(var_name(l.var()))}, {"lowest", l.lowest()}, {"coeffs", std::move(c)}};
}

template <class K>
json to_json(const RationalFunction<K>& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

/// body * zeta^zeta_power * exp(e2 zeta^2 + e4 zeta^4).
template <class K>
json to_json(const GaugedFunction<K>& g) {
  return {{"body", to_json(g.body())},
          {"zeta_power", g.power().to_string()},
          {"e2", to_json(g.e2())},
          {"e4", to_json(g.e4())}};
}

template <class K>
Laurent<K> laurent_from_json(const json& j) {
  std::vector<K> c;
  for (const auto& e : j.at("coeffs")) c.push_back(scalar_from_json<K>(e));
  return Laurent<K>(parse_var(j.at("var").get<std::string>()), j.value("lowest", 0), std::move(c));
}

template <class K>
Polynomial<K> polynomial_from_json(const json& j) {
  return laurent_from_json<K>(j).to_polynomial();
}

template <class K>
RationalFunction<K> rational_function_from_json(const json& j) {
  return RationalFunction<K>(polynomial_from_json<K>(j.at("num")),
                             polynomial_from_json<K>(j.at("den")));
}

template <class K>
GaugedFunction<K> gauged_from_json(const json& j) {
  return GaugedFunction<K>(laurent_from_json<K>(j.at("body")),
                           Rational::parse(j.at("zeta_power").get<std::string>()),
                           scalar_from_json<K>(j.at("e2")), scalar_from_json<K>(j.at("e4")));
}

}  // namespace painleve
