#pragma once

#include <array>
#include <map>
#include <string>

#include "kw/exactalg/json.hpp"
#include "kw/exactalg/multipoly.hpp"

namespace kw {

/// Variables of the coefficient ring Q[hbar] of U_hbar(sl2).
inline const VarList& hbar_vars() {
  static const VarList vars{"hbar"};
  return vars;
}

/// Variables of Q[x, hbar], the coefficient ring of the universal Verma
/// module and everything built from it.
inline const VarList& xh_vars() {
  static const VarList vars{"x", "hbar"};
  return vars;
}

/// Exponents (a, b, c) of the normal-ordered monomial f^a h^b e^c.
using PBWMonomial = std::array<int, 3>;

/// Element of U_hbar(sl2) in PBW normal order f^a h^b e^c with Q[hbar]
/// coefficients. Relations: he - eh = 2 hbar e, hf - fh = -2 hbar f,
/// ef - fe = hbar h.
class PBWElem {
 public:
  using TermMap = std::map<PBWMonomial, MultiPoly>;

  PBWElem() = default;

  static PBWElem monomial(int a, int b, int c, const MultiPoly& coef = MultiPoly(1L)) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative PBW exponent");
    PBWElem r;
    r.add_term({a, b, c}, coef.bound_to(hbar_vars()));
    return r;
  }
  static PBWElem scalar(const MultiPoly& c) { return monomial(0, 0, 0, c); }
  static PBWElem one() { return scalar(MultiPoly(1L)); }
  static PBWElem e() { return monomial(0, 0, 1); }
  static PBWElem h() { return monomial(0, 1, 0); }
  static PBWElem f() { return monomial(1, 0, 0); }
  static MultiPoly hbar() { return MultiPoly::variable(hbar_vars(), "hbar"); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MultiPoly coefficient(int a, int b, int c) const {
    auto it = terms_.find({a, b, c});
    return it == terms_.end() ? MultiPoly(hbar_vars()) : it->second;
  }

  void add_term(const PBWMonomial& m, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c.bound_to(hbar_vars()));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PBWElem operator+(PBWElem a, const PBWElem& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend PBWElem operator-(PBWElem a, const PBWElem& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend PBWElem operator*(const MultiPoly& s, const PBWElem& a) {
    PBWElem r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }
  friend bool operator==(const PBWElem& a, const PBWElem& b) { return a.terms_ == b.terms_; }

  /// Specializes hbar to a rational number (coefficients become constants).
  PBWElem at_hbar(const Rational& value) const {
    PBWElem r;
    for (const auto& [m, c] : terms_)
      r.add_term(m, MultiPoly::constant(hbar_vars(), c.evaluate({value})));
    return r;
  }

 private:
  TermMap terms_;
};

namespace detail {

// Polynomials in (h, hbar) used for the middle factor of f^a P(h) e^c.
inline const VarList& h_hbar_vars() {
  static const VarList vars{"h", "hbar"};
  return vars;
}

// e^c f^d as a map (p, r) -> P(h, hbar) with e^c f^d = sum f^p P e^r.
using Straightened = std::map<std::pair<int, int>, MultiPoly>;

class Straightener {
 public:
  const Straightened& ef(int c, int d) {
    auto it = memo_.find({c, d});
    if (it != memo_.end()) return it->second;
    Straightened out;
    const MultiPoly one = MultiPoly::constant(h_hbar_vars(), Rational(1));
    if (c == 0 || d == 0) {
      out[{d, c}] = one;
    } else {
      // e f^d = f^d e + d hbar f^{d-1} (h - (d-1) hbar), then e^{c-1} from the left.
      const MultiPoly h = MultiPoly::variable(h_hbar_vars(), "h");
      const MultiPoly hb = MultiPoly::variable(h_hbar_vars(), "hbar");
      for (const auto& [pr, poly] : ef(c - 1, d)) accumulate(out, {pr.first, pr.second + 1}, poly);
      for (const auto& [pr, poly] : ef(c - 1, d - 1)) {
        // f^p P e^r (h - (d-1) hbar) = f^p P (h - 2r hbar - (d-1) hbar) e^r
        const MultiPoly shift = h - Rational(2 * pr.second + d - 1) * hb;
        accumulate(out, pr, Rational(d) * hb * poly * shift);
      }
    }
    return memo_.emplace(std::make_pair(c, d), std::move(out)).first->second;
  }

 private:
  static void accumulate(Straightened& s, std::pair<int, int> key, const MultiPoly& p) {
    auto [it, inserted] = s.try_emplace(key, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) s.erase(it);
    }
  }

  std::map<std::pair<int, int>, Straightened> memo_;
};

}  // namespace detail

/// Normal-ordered product.
inline PBWElem pbw_mul(const PBWElem& u, const PBWElem& v) {
  detail::Straightener st;
  const VarList& hv = detail::h_hbar_vars();
  const MultiPoly h = MultiPoly::variable(hv, "h");
  const MultiPoly hb = MultiPoly::variable(hv, "hbar");
  PBWElem out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      const auto [a, b, c] = m1;
      const auto [d, g, k] = m2;
      const MultiPoly coef = (c1 * c2).embed(hv);
      // f^a h^b (e^c f^d) h^g e^k with h^b f^p = f^p (h - 2p hbar)^b and
      // e^r h^g = (h - 2r hbar)^g e^r.
      for (const auto& [pr, mid] : st.ef(c, d)) {
        const auto [p, r] = pr;
        const MultiPoly full = coef * (h - Rational(2 * p) * hb).pow(static_cast<unsigned>(b)) * mid *
                               (h - Rational(2 * r) * hb).pow(static_cast<unsigned>(g));
        for (const auto& [deg, part] : full.as_univariate(0))
          out.add_term({a + p, deg, r + k}, part.restrict_to(hbar_vars()));
      }
    }
  }
  return out;
}

/// C = ef + fe + h^2/2 = 2fe + hbar h + h^2/2.
inline PBWElem casimir() {
  return PBWElem::monomial(1, 0, 1, MultiPoly(2L)) + PBWElem::monomial(0, 1, 0, PBWElem::hbar()) +
         PBWElem::monomial(0, 2, 0, MultiPoly(Rational(1, 2)));
}

inline PBWElem pbw_pow(const PBWElem& u, unsigned k) {
  PBWElem r = PBWElem::one();
  for (unsigned i = 0; i < k; ++i) r = pbw_mul(r, u);
  return r;
}

inline Json to_json(const PBWElem& u) {
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms())
    terms.push_back({{"f", m[0]}, {"h", m[1]}, {"e", m[2]}, {"coef", to_json(c)}});
  return {{"terms", std::move(terms)}};
}

inline std::ostream& operator<<(std::ostream& os, const PBWElem& u) {
  if (u.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    os << (first ? "" : " + ") << "(" << c << ")*f^" << m[0] << "*h^" << m[1] << "*e^" << m[2];
    first = false;
  }
  return os;
}

}  // namespace kw
