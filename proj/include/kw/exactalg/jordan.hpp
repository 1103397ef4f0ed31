#pragma once

#include <algorithm>
#include <vector>

#include "kw/exactalg/linear_solve.hpp"

namespace kw {

/// Jordan block sizes (descending) of a nilpotent matrix over Q, read off
/// the ranks of its powers. Throws DomainError if the matrix is not nilpotent.
inline std::vector<int> nilpotent_jordan_type(const Matrix<Rational>& m) {
  const std::size_t d = m.rows();
  if (d != m.cols()) throw std::invalid_argument("Jordan type of non-square matrix");
  std::vector<std::size_t> ranks{d};
  Matrix<Rational> p = Matrix<Rational>::identity(d, Rational(1), Rational(0));
  while (ranks.back() > 0) {
    p = p * m;
    const std::size_t r = rank(p);
    if (r == ranks.back()) throw DomainError("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<int> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least_k - at_least_next; ++c) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace kw
