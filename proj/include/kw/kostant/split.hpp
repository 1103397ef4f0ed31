#pragma once

#include <map>
#include <vector>

#include "kw/exactalg/linear_solve.hpp"
#include "kw/kostant/phi_module.hpp"

namespace kw {

/// Generic splitting of the canonical filtration of phi(V_n) over Q(x, hbar).
struct SplitBasis {
  int n = 0;
  /// kernel[i]: the e-invariant vector on the weight space of m_{-1} (x) v_i,
  /// with unit coefficient on m_{-1} (x) v_i.
  std::map<int, TensorVec<RatFunc>> kernel;
  /// s[i] = lambda_i kernel[i], normalized so that
  /// s_i = m_{-1} (x) v_i  modulo  span{ f^{(j-i)/2} s_j : j > i }.
  std::map<int, TensorVec<RatFunc>> s;
  /// Column i: coinvariant coordinates of s_i (basis order -n, ..., n).
  Matrix<RatFunc> sbar;
};

namespace detail {

inline RatFunc rf_one() { return lift_coeff<RatFunc>(MultiPoly(1L)); }
inline RatFunc rf_zero() { return lift_coeff<RatFunc>(MultiPoly(0L)); }

// Columns are the given vectors, rows the union of their keys (sorted).
inline Matrix<RatFunc> columns_matrix(const std::vector<TensorVec<RatFunc>>& cols,
                                      std::vector<std::pair<int, int>>& row_keys) {
  std::map<std::pair<int, int>, std::size_t> index;
  for (const auto& v : cols)
    for (const auto& [key, c] : v.terms()) index.emplace(key, 0);
  row_keys.clear();
  for (auto& [key, k] : index) {
    k = row_keys.size();
    row_keys.push_back(key);
  }
  Matrix<RatFunc> m(row_keys.size(), cols.size(), rf_zero());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [key, v] : cols[c].terms()) m(index.at(key), c) = v;
  return m;
}

inline TensorVec<RatFunc> f_power(const TensorVec<RatFunc>& t, int k) {
  TensorVec<RatFunc> r = t;
  for (int i = 0; i < k; ++i) r = tensor_act(Gen::f, r);
  return r;
}

// Unit-normalized kernel of e on span{m_{-1-2k} (x) v_{i+2k}}.
inline TensorVec<RatFunc> e_kernel_vector(int n, int i) {
  const int depth = (n - i) / 2;
  std::vector<TensorVec<RatFunc>> images;
  for (int k = 0; k <= depth; ++k) images.push_back(tensor_act(Gen::e, TensorVec<RatFunc>::basis(n, -1 - 2 * k, i + 2 * k)));
  std::vector<std::pair<int, int>> keys;
  Matrix<RatFunc> m = columns_matrix(images, keys);
  if (m.rows() == 0) m = Matrix<RatFunc>(1, images.size(), rf_zero());
  const auto ker = kernel_basis(m);
  if (ker.size() != 1) throw std::logic_error("e-kernel on a weight space is not one-dimensional");
  if (ker[0][0].is_zero()) throw std::logic_error("e-kernel vector has no top component");
  const RatFunc scale = rf_one() / ker[0][0];
  TensorVec<RatFunc> v(n);
  for (int k = 0; k <= depth; ++k) v.add(-1 - 2 * k, i + 2 * k, scale * ker[0][static_cast<std::size_t>(k)]);
  return v;
}

}  // namespace detail

inline SplitBasis highest_weight_split(int n) {
  if (n < 0) throw DomainError("highest_weight_split needs n >= 0");
  SplitBasis out;
  out.n = n;
  for (int i = n; i >= -n; i -= 2) {
    const auto u = detail::e_kernel_vector(n, i);
    out.kernel.emplace(i, u);
    // lambda u - sum_j beta_j f^{(j-i)/2} s_j = m_{-1} (x) v_i
    std::vector<TensorVec<RatFunc>> cols{u};
    for (int j = i + 2; j <= n; j += 2) cols.push_back(lift_coeff<RatFunc>(MultiPoly(-1L)) * detail::f_power(out.s.at(j), (j - i) / 2));
    cols.push_back(TensorVec<RatFunc>::basis(n, -1, i));
    std::vector<std::pair<int, int>> keys;
    const Matrix<RatFunc> all = detail::columns_matrix(cols, keys);
    Matrix<RatFunc> a(all.rows(), cols.size() - 1, detail::rf_zero());
    std::vector<RatFunc> rhs(all.rows());
    for (std::size_t r = 0; r < all.rows(); ++r) {
      for (std::size_t c = 0; c + 1 < cols.size(); ++c) a(r, c) = all(r, c);
      rhs[r] = all(r, cols.size() - 1);
    }
    const auto sol = solve_linear(a, rhs);
    if (!sol.unique()) throw std::logic_error("filtration normalization is not unique");
    out.s.emplace(i, sol.particular[0] * u);
  }
  out.sbar = Matrix<RatFunc>(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), detail::rf_zero());
  for (const auto& [i, v] : out.s) out.sbar.set_column(label_index(n, i), coinvariant_reduce(v));
  return out;
}

/// Coefficients of the class of m_{-1} (x) v_{-n} in the basis {sbar_i}.
inline std::map<int, RatFunc> idiot_expansion(const SplitBasis& split) {
  const int n = split.n;
  std::vector<RatFunc> target(static_cast<std::size_t>(n + 1), detail::rf_zero());
  target[0] = detail::rf_one();
  const auto sol = solve_linear(split.sbar, target);
  if (!sol.unique()) throw DomainError("split basis does not span the coinvariants");
  std::map<int, RatFunc> out;
  for (int i = -n; i <= n; i += 2) out.emplace(i, sol.particular[label_index(n, i)]);
  return out;
}

inline std::map<int, RatFunc> idiot_expansion(int n) { return idiot_expansion(highest_weight_split(n)); }

/// Coefficient vectors as strings, keyed by the decimal label.
inline Json idiot_json(const std::map<int, RatFunc>& coeffs) {
  Json j = Json::object();
  for (const auto& [i, c] : coeffs) j[std::to_string(i)] = to_string(c);
  return j;
}

inline Json to_json(const SplitBasis& split) {
  return {{"n", split.n},
          {"basis", weight_labels(split.n)},
          {"sbar", string_matrix(split.sbar)},
          {"idiot", idiot_json(idiot_expansion(split))}};
}

}  // namespace kw
