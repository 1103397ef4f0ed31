#pragma once

#include <optional>
#include <vector>

#include "kw/exactalg/matrix.hpp"

namespace kw {

/// Outcome of solving M s = rhs over a field. `consistent` is false when no
/// solution exists; this is distinct from an empty `kernel`, which means the
/// solution (if any) is unique.
template <class T>
struct LinearSolution {
  bool consistent = false;
  std::vector<T> particular;               // free variables set to zero
  std::vector<std::vector<T>> kernel;      // basis of the null space

  bool unique() const { return consistent && kernel.empty(); }
};

namespace detail {

template <class T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form of [M | rhs]
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan on an augmented matrix; only the first `ncols` columns may
// hold pivots. Pivot choice: first nonzero entry, scanning columns left to
// right and rows top to bottom.
template <class T>
Echelon<T> row_reduce(Matrix<T> a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const T inv = T(Rational(1)) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const T factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) = a(i, j) - factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
std::vector<std::vector<T>> kernel_from_echelon(const Echelon<T>& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(ncols);
    v[free] = T(Rational(1));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Exact solution of M s = rhs over a field (Rational or RatFunc).
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& m, const std::vector<T>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto e = detail::row_reduce(std::move(aug), m.cols());
  LinearSolution<T> out;
  for (std::size_t r = e.pivots.size(); r < m.rows(); ++r)
    if (!e.reduced(r, m.cols()).is_zero()) return out;
  out.consistent = true;
  out.particular.assign(m.cols(), T{});
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.particular[e.pivots[r]] = e.reduced(r, m.cols());
  out.kernel = detail::kernel_from_echelon(e, m.cols());
  return out;
}

template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  return detail::kernel_from_echelon(detail::row_reduce(m, m.cols()), m.cols());
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return detail::row_reduce(m, m.cols()).pivots.size();
}

/// Inverse over a field; throws DomainError for singular input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(Rational(1));
  }
  const auto e = detail::row_reduce(std::move(aug), n);
  if (e.pivots.size() != n) throw DomainError("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace kw
