#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>

#include "kw/exactalg/json.hpp"
#include "kw/uhbar/pbw.hpp"

namespace kw {

/// Exponents of u^a v^b t^c D_u^p D_v^q D_t^r (coordinates left of
/// derivatives); c may be negative. D_w = hbar d/dw, so [D_w, w] = hbar.
struct DiffMonomial {
  int u = 0, v = 0, t = 0, du = 0, dv = 0, dt = 0;
  auto operator<=>(const DiffMonomial&) const = default;
  bool coordinate_free() const { return u == 0 && v == 0 && t == 0; }
};

class DiffOp {
 public:
  using Terms = std::map<DiffMonomial, MultiPoly>;

  DiffOp() = default;

  static DiffOp monomial(const DiffMonomial& m, const MultiPoly& c) {
    DiffOp d;
    d.add_term(m, c);
    return d;
  }
  static DiffOp scalar(const Rational& c) { return monomial({}, MultiPoly::constant(hbar_vars(), c)); }
  static DiffOp one() { return scalar(Rational(1)); }
  static DiffOp hbar() { return monomial({}, MultiPoly::variable(hbar_vars(), "hbar")); }
  static DiffOp u() { return monomial({.u = 1}, unit()); }
  static DiffOp v() { return monomial({.v = 1}, unit()); }
  static DiffOp t(int power = 1) { return monomial({.t = power}, unit()); }
  static DiffOp du() { return monomial({.du = 1}, unit()); }
  static DiffOp dv() { return monomial({.dv = 1}, unit()); }
  static DiffOp dt() { return monomial({.dt = 1}, unit()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly coefficient(const DiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? MultiPoly::constant(hbar_vars(), Rational(0)) : it->second;
  }

  void add_term(const DiffMonomial& m, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c.embed(hbar_vars()));
    if (!fresh) {
      it->second = it->second + c.embed(hbar_vars());
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DiffOp& operator+=(const DiffOp& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a += Rational(-1) * b; }
  friend DiffOp operator*(const Rational& c, const DiffOp& a) {
    DiffOp out;
    for (const auto& [m, p] : a.terms_) out.add_term(m, c * p);
    return out;
  }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// Sets hbar to a rational value.
  DiffOp at_hbar(const Rational& value) const {
    DiffOp out;
    for (const auto& [m, c] : terms_) out.add_term(m, MultiPoly::constant(hbar_vars(), c.evaluate({value})));
    return out;
  }

  /// Highest total derivative order.
  int order() const {
    int o = 0;
    for (const auto& [m, c] : terms_) o = std::max(o, m.du + m.dv + m.dt);
    return o;
  }

 private:
  static MultiPoly unit() { return MultiPoly::constant(hbar_vars(), Rational(1)); }
  Terms terms_;
};

namespace detail {

// D^b w^c = sum_k C(b,k) hbar^k c(c-1)...(c-k+1) w^{c-k} D^{b-k}, per variable.
struct LeibnizTerm {
  int coord, deriv, hbar_power;
  Rational coef;
};

inline std::vector<LeibnizTerm> leibniz(int b, int c) {
  std::vector<LeibnizTerm> out;
  Rational binom(1), falling(1);
  for (int k = 0; k <= b; ++k) {
    if (falling.sign() == 0) break;
    out.push_back({c - k, b - k, k, binom * falling});
    binom = binom * Rational(b - k) / Rational(k + 1);
    falling = falling * Rational(c - k);
  }
  return out;
}

}  // namespace detail

inline DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  const MultiPoly hb = MultiPoly::variable(hbar_vars(), "hbar");
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const MultiPoly c = ca * cb;
      // The derivatives of the left factor pass the coordinates of the right one.
      for (const auto& lu : detail::leibniz(ma.du, mb.u))
        for (const auto& lv : detail::leibniz(ma.dv, mb.v))
          for (const auto& lt : detail::leibniz(ma.dt, mb.t)) {
            DiffMonomial m{ma.u + lu.coord, ma.v + lv.coord, ma.t + lt.coord,
                           lu.deriv + mb.du, lv.deriv + mb.dv, lt.deriv + mb.dt};
            out.add_term(m, lu.coef * lv.coef * lt.coef * c *
                                  hb.pow(static_cast<unsigned>(lu.hbar_power + lv.hbar_power + lt.hbar_power)));
          }
    }
  }
  return out;
}

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

inline std::string to_string(const DiffOp& d) {
  if (d.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : d.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    auto put = [&](const char* name, int e) {
      if (e == 0) return;
      s += std::string("*") + name;
      if (e != 1) s += "^" + std::to_string(e);
    };
    put("u", m.u); put("v", m.v); put("t", m.t); put("Du", m.du); put("Dv", m.dv); put("Dt", m.dt);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << to_string(d); }

}  // namespace kw
