#pragma once

#include <map>
#include <sstream>

#include "kw/exactalg/hilbert.hpp"
#include "kw/exactalg/jordan.hpp"
#include "kw/exactalg/json.hpp"
#include "kw/kostant/split.hpp"
#include "kw/rootdata/invariant_degrees.hpp"

namespace kw {

/// H^*(Gr_n) for PGL(2) with its sl2-action (basis v_{-n}, ..., v_n) and the
/// filtration generators v~_i = g_i v~_{-n}.
struct CohModule {
  int n = 0;
  Matrix<Rational> e, h, f;
  std::map<int, MultiPoly> generators;
};

/// h v_i = i v_i, e v_{i-2} = (n+i)/2 v_i, f v_{i+2} = (n-i)/2 v_i.
inline CohModule sl2_action(int n) {
  if (n < 0) throw DomainError("sl2_action needs n >= 0");
  const std::size_t d = static_cast<std::size_t>(n + 1);
  CohModule c;
  c.n = n;
  c.e = c.h = c.f = Matrix<Rational>(d, d, Rational(0));
  for (int i = -n; i <= n; i += 2) {
    c.h(label_index(n, i), label_index(n, i)) = Rational(i);
    if (i - 2 >= -n) c.e(label_index(n, i), label_index(n, i - 2)) = Rational(n + i, 2);
    if (i + 2 <= n) c.f(label_index(n, i), label_index(n, i + 2)) = Rational(n - i, 2);
  }
  return c;
}

/// g_i = prod_{k=(i-n)/2}^{i-1} (x + k hbar), a product of (n+i)/2 factors.
inline std::map<int, MultiPoly> filtration_generators(int n) {
  if (n < 0) throw DomainError("filtration_generators needs n >= 0");
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  std::map<int, MultiPoly> out;
  for (int i = -n; i <= n; i += 2) {
    MultiPoly g = MultiPoly::constant(xh_vars(), Rational(1));
    for (int k = (i - n) / 2; k <= i - 1; ++k) g = g * (x + Rational(k) * hb);
    out.emplace(i, g);
  }
  return out;
}

inline CohModule coh_module(int n) {
  CohModule c = sl2_action(n);
  c.generators = filtration_generators(n);
  return c;
}

inline Json to_json(const CohModule& c) {
  Json gens = Json::object();
  for (const auto& [i, g] : c.generators) gens[std::to_string(i)] = to_string(g);
  return {{"n", c.n}, {"basis", weight_labels(c.n)}, {"e", string_matrix(c.e)}, {"h", string_matrix(c.h)},
          {"f", string_matrix(c.f)}, {"generators", std::move(gens)}};
}

// ---- lattice comparison ----

/// Both sides as Q[x, hbar]-lattices in (+)_j Q(x, hbar) 1_j (j = -n..n).
/// Cohomology: the cyclic module generated by v~_{-n}, whose localization is
/// (1/g_j)_j, over Q[x, hbar][y], where y = (z_right - z_left)/hbar acts on
/// 1_j by ((x + j hbar)^2 - x^2)/hbar = 2jx + j^2 hbar. Algebra: the classes
/// of m_{-1} (x) v_i written in the split basis {sbar_j}.
struct LatticeReport {
  int n = 0;
  Matrix<RatFunc> coh_generators;   // columns y^k w, k = 0..n
  Matrix<RatFunc> alg_generators;   // columns: classes of m_{-1} (x) v_i
  Matrix<RatFunc> coh_in_alg;       // coh = alg * coh_in_alg
  Matrix<RatFunc> alg_in_coh;       // alg = coh * alg_in_coh
  bool coh_in_alg_polynomial = false;
  bool alg_in_coh_polynomial = false;
  bool equal() const { return coh_in_alg_polynomial && alg_in_coh_polynomial; }
};

namespace detail {

inline bool all_polynomial(const Matrix<RatFunc>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).as_polynomial()) return false;
  return true;
}

// Solves a * s = b column by column.
inline Matrix<RatFunc> solve_columns(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b) {
  Matrix<RatFunc> out(a.cols(), b.cols(), rf_zero());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    const auto sol = solve_linear(a, b.column(c));
    if (!sol.unique()) throw DomainError("lattice generators are not a basis of the localization");
    out.set_column(c, sol.particular);
  }
  return out;
}

}  // namespace detail

inline LatticeReport lattice_compare(int n) {
  if (n < 0) throw DomainError("lattice_compare needs n >= 0");
  const std::size_t d = static_cast<std::size_t>(n + 1);
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  LatticeReport rep;
  rep.n = n;

  const auto g = filtration_generators(n);
  rep.coh_generators = Matrix<RatFunc>(d, d, detail::rf_zero());
  for (int j = -n; j <= n; j += 2) {
    const RatFunc w = RatFunc(MultiPoly::constant(xh_vars(), Rational(1)), g.at(j));
    const RatFunc y = RatFunc(Rational(2 * j) * x + Rational(j * j) * hb);
    RatFunc cur = w;
    for (std::size_t k = 0; k < d; ++k) {
      rep.coh_generators(label_index(n, j), k) = cur;
      cur = cur * y;
    }
  }

  rep.alg_generators = inverse(highest_weight_split(n).sbar);
  rep.coh_in_alg = detail::solve_columns(rep.alg_generators, rep.coh_generators);
  rep.alg_in_coh = detail::solve_columns(rep.coh_generators, rep.alg_generators);
  rep.coh_in_alg_polynomial = detail::all_polynomial(rep.coh_in_alg);
  rep.alg_in_coh_polynomial = detail::all_polynomial(rep.alg_in_coh);
  return rep;
}

inline Json to_json(const LatticeReport& r) {
  return {{"n", r.n},
          {"equal", r.equal()},
          {"coh_in_alg", string_matrix(r.coh_in_alg)},
          {"alg_in_coh", string_matrix(r.alg_in_coh)}};
}

// ---- graded dimension of the normal-cone ring ----

struct NormalConeSeries {
  std::string type;
  std::vector<int> generator_degrees;
  HilbertSeries series;
};

/// Generators x_i in degree 2 d_i, y_i in degree 2 d_i - 2, and hbar in degree 2.
inline NormalConeSeries normal_cone_hilbert(const RootSystem& rs, int max_degree) {
  NormalConeSeries out;
  out.type = rs.tag();
  const auto d = rs.rank() == 0 ? InvariantDegrees{} : invariant_degrees(rs);
  for (int di : d.degrees) out.generator_degrees.push_back(2 * di);
  for (int di : d.degrees) out.generator_degrees.push_back(2 * di - 2);
  out.generator_degrees.push_back(2);
  out.series = free_graded_hilbert(out.generator_degrees, max_degree);
  return out;
}

inline Json to_json(const NormalConeSeries& s) {
  return {{"type", s.type},
          {"generator_degrees", s.generator_degrees},
          {"max_degree", s.series.max_degree},
          {"coefficients", s.series.coefficients}};
}

/// "degree,coefficient" rows for the even degrees.
inline std::string to_csv(const NormalConeSeries& s) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (int k = 0; k <= s.series.max_degree; k += 2) os << k << "," << s.series.at(k) << "\n";
  return os.str();
}

}  // namespace kw
