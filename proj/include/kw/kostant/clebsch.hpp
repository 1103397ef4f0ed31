#pragma once

#include <map>
#include <set>

#include "kw/kostant/split.hpp"

namespace kw {

/// phi(V_m) * phi(V_n) over the center: on the generic eigenline sbar_i of
/// phi(V_m) the center acts by ((x + i hbar)^2 - hbar^2)/2, which is the left
/// central character of phi(V_n) at x -> x + i hbar. The right Casimir of the
/// product is therefore
///   T = (P (x) I) blockdiag_i(B_n(x + i hbar)) (P^{-1} (x) I)
/// with P the split basis of phi(V_m) and B_n the Casimir matrix of phi(V_n).
/// Basis order: (i, k) with the phi(V_n) index k fastest.
struct ClebschReport {
  int m = 0, n = 0;
  std::size_t rank = 0;
  Matrix<RatFunc> right_casimir;
  bool annihilated = false;               // prod over distinct eigenvalues kills T
  bool minimal = false;                   // no proper sub-product does
  bool characteristic_matches = false;    // det(2z - 2T) = prod_k annihilator(phi(V_k))
  std::map<int, std::pair<std::size_t, std::size_t>> multiplicities;  // label -> (nullity, CG count)

  bool passed() const {
    if (!annihilated || !minimal || !characteristic_matches) return false;
    for (const auto& [l, mc] : multiplicities)
      if (mc.first != mc.second) return false;
    return true;
  }
};

namespace detail {

inline MultiPoly shift_x(const MultiPoly& p, int i) {
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  return p.bound_to(xh_vars()).substitute(0, x + Rational(i) * hb);
}

}  // namespace detail

inline ClebschReport clebsch_convolution(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("clebsch_convolution needs m, n >= 0");
  ClebschReport rep;
  rep.m = m;
  rep.n = n;
  const std::size_t dm = static_cast<std::size_t>(m + 1), dn = static_cast<std::size_t>(n + 1);
  rep.rank = dm * dn;

  const SplitBasis split = highest_weight_split(m);
  const Matrix<RatFunc>& p = split.sbar;
  const Matrix<RatFunc> pinv = inverse(p);
  const PhiModule phin = phi_module(n);
  const RatFunc zero = detail::rf_zero(), one = detail::rf_one();

  Matrix<RatFunc> blocks(rep.rank, rep.rank, zero);
  std::vector<Matrix<MultiPoly>> block_polys;
  for (std::size_t a = 0; a < dm; ++a) {
    const int i = index_label(m, a);
    Matrix<MultiPoly> b = phin.casimir_matrix.map([i](const MultiPoly& e) { return detail::shift_x(e, i); });
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dn; ++c) blocks(a * dn + r, a * dn + c) = RatFunc(b(r, c));
    block_polys.push_back(std::move(b));
  }
  const Matrix<RatFunc> id_n = Matrix<RatFunc>::identity(dn, one, zero);
  rep.right_casimir = kronecker(p, id_n) * blocks * kronecker(pinv, id_n);

  std::map<int, std::size_t> cg;
  for (int i = -m; i <= m; i += 2)
    for (int k = -n; k <= n; k += 2) ++cg[i + k];
  std::vector<int> labels;
  for (const auto& [l, c] : cg) labels.push_back(l);

  rep.annihilated = casimir_factor_product(rep.right_casimir, labels).is_zero();
  rep.minimal = true;
  for (std::size_t drop = 0; drop < labels.size(); ++drop) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (k != drop) sub.push_back(labels[k]);
    if (casimir_factor_product(rep.right_casimir, sub).is_zero()) rep.minimal = false;
  }

  const RatFunc two = lift_coeff<RatFunc>(MultiPoly(2L));
  for (const auto& [l, count] : cg) {
    Matrix<RatFunc> shifted = two * rep.right_casimir;
    for (std::size_t k = 0; k < rep.rank; ++k) shifted(k, k) -= RatFunc(casimir_eigen2(l));
    rep.multiplicities[l] = {rep.rank - kw::rank(shifted), count};
  }

  // characteristic polynomial, block by block
  const MultiPoly z = MultiPoly::variable(xhz_vars(), "z");
  MultiPoly charpoly = MultiPoly::constant(xhz_vars(), Rational(1));
  for (const auto& b : block_polys) {
    Matrix<MultiPoly> zb(dn, dn, MultiPoly(xhz_vars()));
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dn; ++c) zb(r, c) = Rational(-2) * b(r, c).embed(xhz_vars()) + (r == c ? Rational(2) * z : MultiPoly(xhz_vars()));
    charpoly = charpoly * bareiss_determinant(std::move(zb)).bound_to(xhz_vars());
  }
  MultiPoly expected = MultiPoly::constant(xhz_vars(), Rational(1));
  for (int k = std::abs(m - n); k <= m + n; k += 2)
    for (int l = -k; l <= k; l += 2) expected = expected * casimir_factor(l);
  rep.characteristic_matches = charpoly == expected;
  return rep;
}

}  // namespace kw
