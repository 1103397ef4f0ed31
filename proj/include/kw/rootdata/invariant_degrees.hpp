#pragma once

#include <numeric>
#include <vector>

#include "kw/rootdata/root_system.hpp"

namespace kw {

/// Degrees d_1 <= ... <= d_r of the fundamental W-invariant polynomials.
struct InvariantDegrees {
  std::vector<int> degrees;

  long product() const {
    return std::accumulate(degrees.begin(), degrees.end(), 1L, std::multiplies<long>());
  }
  /// sum (d_i - 1), which equals the number of positive roots.
  long exponent_sum() const {
    long s = 0;
    for (int d : degrees) s += d - 1;
    return s;
  }
};

namespace detail {

// Coefficients of det(I - q*w) for an integer matrix w, lowest degree first.
inline std::vector<Rational> reflection_char_poly(const IntMatrix& w) {
  const VarList q_vars{"q"};
  const MultiPoly q = MultiPoly::variable(q_vars, "q");
  Matrix<MultiPoly> m(w.size(), w.size(), MultiPoly(q_vars));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      m(i, j) = MultiPoly::constant(q_vars, Rational(i == j ? 1 : 0)) - Rational(w[i][j]) * q;
  const MultiPoly det = bareiss_determinant(std::move(m)).bound_to(q_vars);
  std::vector<Rational> coeffs(w.size() + 1, Rational(0));
  for (const auto& [e, c] : det.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
  return coeffs;
}

// Power series of 1/p(q) for p with p(0) = 1.
inline std::vector<Rational> invert_series(const std::vector<Rational>& p, int max_degree) {
  std::vector<Rational> s(static_cast<std::size_t>(max_degree) + 1, Rational(0));
  s[0] = Rational(1);
  for (int k = 1; k <= max_degree; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j)
      acc += p[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s;
}

// Multiplies a truncated series by 1/(1 - q^d).
inline void divide_by_one_minus_qd(std::vector<Rational>& s, int d) {
  for (std::size_t k = static_cast<std::size_t>(d); k < s.size(); ++k) s[k] += s[k - static_cast<std::size_t>(d)];
}

}  // namespace detail

/// Molien series (1/|W|) sum_w 1/det(1 - q w) of the reflection
/// representation, truncated at max_degree.
inline std::vector<Rational> molien_series(const RootSystem& rs, int max_degree) {
  std::vector<Rational> total(static_cast<std::size_t>(max_degree) + 1, Rational(0));
  for (const auto& w : rs.weyl_group()) {
    const auto s = detail::invert_series(detail::reflection_char_poly(w.action), max_degree);
    for (std::size_t k = 0; k < s.size(); ++k) total[k] += s[k];
  }
  const Rational order(static_cast<long>(rs.weyl_group().size()));
  for (auto& c : total) c /= order;
  return total;
}

/// Reads the invariant degrees off the Molien series: it equals
/// prod_i 1/(1 - q^{d_i}), so the degrees are peeled off from the lowest
/// degree where the series and the running product disagree.
inline InvariantDegrees invariant_degrees(const RootSystem& rs) {
  const int max_degree = static_cast<int>(rs.weyl_group().size()) + 1;
  const auto molien = molien_series(rs, max_degree);
  std::vector<Rational> product(molien.size(), Rational(0));
  product[0] = Rational(1);
  InvariantDegrees out;
  for (int k = 1; k <= max_degree && out.degrees.size() < rs.rank(); ++k) {
    const Rational diff = molien[static_cast<std::size_t>(k)] - product[static_cast<std::size_t>(k)];
    if (diff.is_zero()) continue;
    if (!diff.is_integer() || diff.sign() < 0) throw DomainError("Molien series is not a free invariant ring");
    for (long m = 0; m < diff.to_long(); ++m) {
      out.degrees.push_back(k);
      detail::divide_by_one_minus_qd(product, k);
    }
  }
  if (out.degrees.size() != rs.rank() || product != molien)
    throw DomainError("invariant degrees could not be extracted for " + rs.tag());
  return out;
}

}  // namespace kw
