#pragma once

#include <map>
#include <string>

#include "kw/exactalg/ratfunc.hpp"
#include "kw/rootdata/root_system.hpp"

namespace kw {

/// Variables on t* x A^1: "x", "hbar" in rank 1 (matching the sl2 modules),
/// "t1", ..., "tr", "hbar" otherwise. t = sum t_i omega_i, so <t, h_i> = t_i.
inline VarList torus_vars(std::size_t rank) {
  if (rank == 1) return VarList{"x", "hbar"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("t" + std::to_string(i));
  names.push_back("hbar");
  return VarList(std::move(names));
}

/// Element of (+)_lambda O(Gamma_lambda) (x) k(t* x A^1): weight -> coefficient.
struct LocalizedElement {
  VarList vars;
  std::map<Weight, RatFunc> terms;

  void add(const Weight& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) {
    for (const auto& [w, c] : b.terms) a.add(w, c);
    return a;
  }
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (auto i = a.terms.begin(), j = b.terms.begin(); i != a.terms.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }
};

/// p_alpha(v) = sum_{k=0}^{-lambda(h_alpha)} c_k 1_{lambda + k alpha} for a
/// vector v of weight lambda killed by f_alpha, with
/// c_k = prod_{j = k + lambda(h_alpha)}^{2k - 1 + lambda(h_alpha)} (h_alpha + j hbar)^{-1}.
/// The vector part e_alpha^k v is implicit in the weight label.
inline LocalizedElement p_alpha(const RootSystem& rs, const Weight& lambda, std::size_t alpha) {
  if (alpha >= rs.rank()) throw DomainError("simple root index out of range");
  if (lambda.rank() != rs.rank()) throw DomainError("weight has the wrong rank");
  const int l = rs.coroot_pairing(lambda, alpha);
  if (l > 0) throw DomainError("p_alpha needs lambda(h_alpha) <= 0");
  const VarList vars = torus_vars(rs.rank());
  const MultiPoly h = MultiPoly::variable(vars, vars[alpha]);
  const MultiPoly hb = MultiPoly::variable(vars, "hbar");
  LocalizedElement out{vars, {}};
  const Weight a = rs.simple_root(alpha);
  for (int k = 0; k <= -l; ++k) {
    MultiPoly den = MultiPoly::constant(vars, Rational(1));
    for (int j = k + l; j <= 2 * k - 1 + l; ++j) den = den * (h + Rational(j) * hb);
    out.add(lambda + k * a, RatFunc(MultiPoly::constant(vars, Rational(1)), den));
  }
  return out;
}

}  // namespace kw
