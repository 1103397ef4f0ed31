#pragma once

#include "kw/exactalg/multipoly.hpp"

namespace kw {

namespace detail {

inline std::optional<std::size_t> first_common_or_any_var(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = 0; v < a.vars().size(); ++v)
    if (a.involves(v) || b.involves(v)) return v;
  return std::nullopt;
}

// Leading coefficient of `p` viewed as a polynomial in `var`.
inline MultiPoly lead_in(const MultiPoly& p, std::size_t var) {
  return p.as_univariate(var).rbegin()->second;
}

inline MultiPoly shift_var(const MultiPoly& p, std::size_t var, int k) {
  Exponent e(p.vars().size(), 0);
  e[var] = k;
  return p * MultiPoly::monomial(p.vars(), e, Rational(1));
}

// Pseudo-remainder of a by b in `var` (both must involve only shared vars).
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MultiPoly lb = lead_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    a = lb * a - shift_var(lead_in(a, var), var, da - db) * b;
  }
  return a;
}

}  // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of `p` as a polynomial in `var`.
inline MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.vars());
  for (const auto& [k, c] : p.as_univariate(var)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_in(p, var));
}

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (lexicographic leading term). gcd(0, 0) = 0.
///
/// Recursive primitive polynomial remainder sequence: content in the first
/// occurring variable is handled by recursion on the coefficients.
inline MultiPoly poly_gcd(const MultiPoly& a_in, const MultiPoly& b_in) {
  if (a_in.is_zero()) return b_in.monic();
  if (b_in.is_zero()) return a_in.monic();
  const VarList vars = a_in.vars().empty() ? b_in.vars() : a_in.vars();
  const MultiPoly a = a_in.bound_to(vars), b = b_in.bound_to(vars);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(vars, Rational(1));

  auto var = detail::first_common_or_any_var(a, b);
  const std::size_t v = *var;
  if (!a.involves(v)) return poly_gcd(a, content_in(b, v));
  if (!b.involves(v)) return poly_gcd(content_in(a, v), b);

  const MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  const MultiPoly c = poly_gcd(ca, cb);
  MultiPoly p = *divide_exact(a, ca);
  MultiPoly q = *divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    MultiPoly r = detail::pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      q = MultiPoly::constant(vars, Rational(1));
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(q, v)).monic();
}

}  // namespace kw
