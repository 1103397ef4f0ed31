#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "kw/toda/diffop.hpp"
#include "kw/uhbar/modules.hpp"

namespace kw {

enum class Side { left, right };

/// Invariant vector fields on the big cell g = n_-(u) diag(t, 1/t) w0 n_-(v).
/// Left fields are a homomorphism, [L_x, L_y] = hbar L_[x,y]; right fields an
/// anti-homomorphism, [R_x, R_y] = -hbar R_[x,y]; left and right commute.
/// N_- acts by translation: L_f = -D_u, R_f = -D_v.
inline std::map<std::pair<Gen, Side>, DiffOp> invariant_fields() {
  const DiffOp u = DiffOp::u(), v = DiffOp::v(), t = DiffOp::t(), ti2 = DiffOp::t(-2);
  const DiffOp du = DiffOp::du(), dv = DiffOp::dv(), dt = DiffOp::dt();
  std::map<std::pair<Gen, Side>, DiffOp> out;
  out[{Gen::e, Side::left}] = u * u * du - t * u * dt + ti2 * dv;
  out[{Gen::h, Side::left}] = Rational(2) * u * du - t * dt;
  out[{Gen::f, Side::left}] = Rational(-1) * du;
  out[{Gen::e, Side::right}] = ti2 * du - t * v * dt + v * v * dv;
  out[{Gen::h, Side::right}] = t * dt - Rational(2) * v * dv;
  out[{Gen::f, Side::right}] = Rational(-1) * dv;
  return out;
}

/// Image of a PBW element under the left (homomorphic) or right realization.
/// The right realization reverses products, so f^a h^b e^c maps to
/// R_e^c R_h^b R_f^a.
inline DiffOp realize(const PBWElem& x, Side side) {
  const auto fields = invariant_fields();
  const DiffOp& e = fields.at({Gen::e, side});
  const DiffOp& h = fields.at({Gen::h, side});
  const DiffOp& f = fields.at({Gen::f, side});
  auto power = [](const DiffOp& a, int k) {
    DiffOp r = DiffOp::one();
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
  };
  DiffOp out;
  for (const auto& [key, c] : x.terms()) {
    const auto [a, b, cc] = key;
    const DiffOp word = side == Side::left ? power(f, a) * power(h, b) * power(e, cc)
                                           : power(e, cc) * power(h, b) * power(f, a);
    for (const auto& [m, p] : word.terms()) out.add_term(m, p * c);
  }
  return out;
}

/// A DiffOp in t, 1/t and D_t only.
struct TodaOp {
  DiffOp op;
  friend bool operator==(const TodaOp&, const TodaOp&) = default;
};

/// Class of op modulo the left ideal generated by L_f - 1 and R_f + 1,
/// i.e. D_u -> -1 and D_v -> 1 on the right of each normal-ordered term.
/// Throws DomainError if the result still depends on u or v.
inline TodaOp kk_reduce(const DiffOp& op) {
  DiffOp r;
  for (const auto& [m, c] : op.terms()) {
    DiffMonomial k = m;
    k.du = k.dv = 0;
    r.add_term(k, m.du % 2 == 0 ? c : -c);
  }
  for (const auto& [m, c] : r.terms())
    if (m.u != 0 || m.v != 0) throw DomainError("operator is not invariant modulo the Whittaker ideal: " + to_string(r));
  return {r};
}

inline TodaOp operator*(const TodaOp& a, const TodaOp& b) { return {a.op * b.op}; }

/// Quadratic Casimir ef + fe + h^2/2.
inline PBWElem casimir_ef() {
  const PBWElem e = PBWElem::e(), f = PBWElem::f(), h = PBWElem::h();
  return pbw_mul(e, f) + pbw_mul(f, e) + MultiPoly(Rational(1, 2)) * pbw_mul(h, h);
}

inline const TodaOp& reduced_casimir() {
  static std::once_flag once;
  static TodaOp value;
  std::call_once(once, [] { value = kk_reduce(realize(casimir_ef(), Side::left)); });
  return value;
}

inline Json to_json(const TodaOp& op) {
  Json terms = Json::array();
  for (const auto& [m, c] : op.op.terms()) terms.push_back({{"t", m.t}, {"dt", m.dt}, {"coef", to_string(c)}});
  return {{"terms", std::move(terms)}};
}

}  // namespace kw
