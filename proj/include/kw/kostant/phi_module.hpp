#pragma once

#include <vector>

#include "kw/exactalg/jordan.hpp"
#include "kw/exactalg/json.hpp"
#include "kw/kostant/coinvariants.hpp"

namespace kw {

/// Variables (x, hbar, z): z is the central variable of the annihilator.
inline const VarList& xhz_vars() {
  static const VarList vars{"x", "hbar", "z"};
  return vars;
}

/// psi(f) = 1: the Whittaker character used by every reduction here.
inline constexpr int kWhittakerPsiF = 1;

/// Kostant reduction phi(V_n): free of rank n+1 over Q[x, hbar] with basis the
/// classes of m_{-1} (x) v_i, i = -n, ..., n (in that order).
struct PhiModule {
  int n = 0;
  Matrix<MultiPoly> casimir_matrix;       // column i = class of C (m_{-1} (x) v_i)
  std::vector<MultiPoly> annihilator;     // coefficients in z, lowest degree first

  std::size_t rank() const { return static_cast<std::size_t>(n + 1); }
};

/// 2z - (x + i hbar)^2 + hbar^2 over (x, hbar, z).
inline MultiPoly casimir_factor(int i) {
  const MultiPoly x = MultiPoly::variable(xhz_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xhz_vars(), "hbar");
  const MultiPoly z = MultiPoly::variable(xhz_vars(), "z");
  const MultiPoly s = x + Rational(i) * hb;
  return Rational(2) * z - s * s + hb * hb;
}

/// (x + i hbar)^2 - hbar^2 over (x, hbar): twice the Casimir eigenvalue on the
/// graded piece of weight i.
inline MultiPoly casimir_eigen2(int i) {
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  const MultiPoly s = x + Rational(i) * hb;
  return s * s - hb * hb;
}

/// prod_{i=-n, step 2}^{n} (2z - (x + i hbar)^2 + hbar^2) as a polynomial in z.
inline std::vector<MultiPoly> annihilator_polynomial(int n) {
  MultiPoly p = MultiPoly::constant(xhz_vars(), Rational(1));
  for (int i = -n; i <= n; i += 2) p = p * casimir_factor(i);
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(n + 2), MultiPoly(xh_vars()));
  for (const auto& [deg, c] : p.as_univariate(2)) coeffs[static_cast<std::size_t>(deg)] = c.restrict_to(xh_vars());
  return coeffs;
}

template <class T>
Matrix<T> eval_matrix_polynomial(const std::vector<MultiPoly>& coeffs, const Matrix<T>& m) {
  const std::size_t d = m.rows();
  const T zero = lift_coeff<T>(MultiPoly(0L));
  Matrix<T> result(d, d, zero);
  // Horner
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * m;
    for (std::size_t k = 0; k < d; ++k) result(k, k) += lift_coeff<T>(*it);
  }
  return result;
}

/// prod_i (2 M - ((x + i hbar)^2 - hbar^2) Id) over the given labels.
template <class T>
Matrix<T> casimir_factor_product(const Matrix<T>& m, const std::vector<int>& labels) {
  const std::size_t d = m.rows();
  Matrix<T> result = Matrix<T>::identity(d, lift_coeff<T>(MultiPoly(1L)), lift_coeff<T>(MultiPoly(0L)));
  const T two = lift_coeff<T>(MultiPoly(2L));
  for (int i : labels) {
    Matrix<T> f = two * m;
    for (std::size_t k = 0; k < d; ++k) f(k, k) -= lift_coeff<T>(casimir_eigen2(i));
    result = result * f;
  }
  return result;
}

inline std::vector<int> weight_labels(int n) {
  std::vector<int> out;
  for (int i = -n; i <= n; i += 2) out.push_back(i);
  return out;
}

inline PhiModule phi_module(int n) {
  if (n < 0) throw DomainError("phi_module needs n >= 0");
  PhiModule phi;
  phi.n = n;
  phi.casimir_matrix = Matrix<MultiPoly>(phi.rank(), phi.rank(), MultiPoly(xh_vars()));
  const PBWElem c = casimir();
  for (int i = -n; i <= n; i += 2) {
    const auto col = coinvariant_reduce(tensor_act(c, TensorVec<MultiPoly>::basis(n, -1, i)));
    for (std::size_t r = 0; r < col.size(); ++r) phi.casimir_matrix(r, label_index(n, i)) = col[r].bound_to(xh_vars());
  }
  phi.annihilator = annihilator_polynomial(n);
  return phi;
}

/// N = (casimir - (x^2 - hbar^2)/2 Id) / hbar, which must be polynomial.
inline Matrix<MultiPoly> quasiclassical_operator(const PhiModule& phi) {
  const std::size_t d = phi.rank();
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  const MultiPoly shift = Rational(1, 2) * casimir_eigen2(0);
  Matrix<MultiPoly> out(d, d, MultiPoly(xh_vars()));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly entry = phi.casimir_matrix(r, c);
      if (r == c) entry -= shift;
      auto q = divide_exact(entry, hb);
      if (!q) throw DomainError("Casimir operator is not congruent to its scalar part modulo hbar");
      out(r, c) = *q;
    }
  return out;
}

/// Jordan type of N at hbar = x = 0.
inline std::vector<int> quasiclassical_jordan(int n) {
  const auto nmat = quasiclassical_operator(phi_module(n));
  return nilpotent_jordan_type(nmat.map([](const MultiPoly& p) { return p.evaluate({Rational(0), Rational(0)}); }));
}

inline Json to_json(const PhiModule& phi) {
  Json ann = Json::array();
  for (const auto& c : phi.annihilator) ann.push_back(to_string(c));
  return {{"n", phi.n},
          {"basis", weight_labels(phi.n)},
          {"casimir_matrix", string_matrix(phi.casimir_matrix)},
          {"annihilator_z_coefficients", std::move(ann)}};
}

}  // namespace kw
