#pragma once

#include <random>
#include <vector>

#include "kw/uhbar/modules.hpp"

namespace kw {

/// Position of label i in the basis [-n, -n+2, ..., n].
inline std::size_t label_index(int n, int i) { return static_cast<std::size_t>((i + n) / 2); }
inline int index_label(int n, std::size_t k) { return -n + 2 * static_cast<int>(k); }

namespace detail {

// One step of m_{j-2} (x) v_i -> m_j (x) v_i - (n-i+2)/2 hbar m_j (x) v_{i-2},
// from (f - 1)(m_j (x) v_i) = 0 in the coinvariants.
template <class C>
void push_up(TensorVec<C>& acc, int n, int j_low, int i, const C& c) {
  const int j = j_low + 2;
  acc.add(j, i, c);
  if (i - 2 >= -n) acc.add(j, i - 2, lift_coeff<C>(Rational(-(n - i + 2), 2) * MultiPoly::variable(xh_vars(), "hbar")) * c);
}

template <class C>
std::vector<C> read_top(const TensorVec<C>& t) {
  const int n = t.n();
  std::vector<C> out(static_cast<std::size_t>(n + 1));
  for (const auto& [key, c] : t.terms()) out[label_index(n, key.second)] += c;
  return out;
}

}  // namespace detail

/// Coordinates of the psi-coinvariant class of t in the basis
/// {m_{-1} (x) v_i}, i = -n, ..., n. Rewrites the deepest Verma level first.
template <class C>
std::vector<C> coinvariant_reduce(const TensorVec<C>& t) {
  const int n = t.n();
  TensorVec<C> cur = t;
  for (;;) {
    int deepest = -1;
    for (const auto& [key, c] : cur.terms()) deepest = std::min(deepest, key.first);
    if (deepest == -1) return detail::read_top(cur);
    TensorVec<C> next(n);
    for (const auto& [key, c] : cur.terms()) {
      if (key.first == deepest)
        detail::push_up(next, n, key.first, key.second, c);
      else
        next.add(key.first, key.second, c);
    }
    cur = std::move(next);
  }
}

/// Same reduction, rewriting one randomly chosen non-top term at a time.
template <class C, class Rng>
std::vector<C> coinvariant_reduce_random(const TensorVec<C>& t, Rng& rng) {
  const int n = t.n();
  TensorVec<C> cur = t;
  for (;;) {
    std::vector<std::pair<int, int>> pending;
    for (const auto& [key, c] : cur.terms())
      if (key.first < -1) pending.push_back(key);
    if (pending.empty()) return detail::read_top(cur);
    const auto key = pending[std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng)];
    const C c = cur.coefficient(key.first, key.second);
    cur.add(key.first, key.second, -c);
    detail::push_up(cur, n, key.first, key.second, c);
  }
}

}  // namespace kw
