#pragma once

#include <json.hpp>

#include "kw/exactalg/hilbert.hpp"
#include "kw/exactalg/matrix.hpp"
#include "kw/exactalg/ratfunc.hpp"

namespace kw {

using Json = nlohmann::json;

/// {"vars":[...], "terms":[{"exp":[...], "coef":"p/q"}, ...]}, terms in
/// ascending lexicographic exponent order.
inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.fraction_string()}});
  return {{"vars", p.vars().names()}, {"terms", std::move(terms)}};
}

inline MultiPoly poly_from_json(const Json& j) {
  VarList vars(j.at("vars").get<std::vector<std::string>>());
  MultiPoly p(vars);
  for (const auto& t : j.at("terms"))
    p += MultiPoly::monomial(vars, t.at("exp").get<Exponent>(), Rational::parse(t.at("coef").get<std::string>()));
  return p;
}

inline Json to_json(const RatFunc& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

inline Json to_json(const Matrix<MultiPoly>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const HilbertSeries& s) {
  return {{"max_degree", s.max_degree}, {"coefficients", s.coefficients}};
}

inline std::string text(const Rational& r) { return r.str(); }
inline std::string text(const MultiPoly& p) { return to_string(p); }
inline std::string text(const RatFunc& f) { return to_string(f); }

/// Rows of entries rendered as human-readable strings.
template <class T>
Json string_matrix(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kw
