#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kw/exactalg/rational.hpp"

namespace kw {

/// Ordered list of variable names shared between polynomials of one
/// computation. Two lists are compatible iff their names agree in order.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::initializer_list<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(names)) {}
  explicit VarList(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }
  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
    return *i;
  }

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent
/// vectors in lexicographic order; zero coefficients are never stored.
///
/// A polynomial with an empty variable list is an unbound constant and
/// adopts the variable list of whatever it is combined with.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}
  explicit MultiPoly(long c) { if (c != 0) terms_.emplace(Exponent{}, Rational(c)); }
  explicit MultiPoly(const Rational& c) { if (!c.is_zero()) terms_.emplace(Exponent{}, c); }

  static MultiPoly constant(const VarList& vars, const Rational& c) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(Exponent(vars.size(), 0), c);
    return p;
  }
  static MultiPoly variable(const VarList& vars, std::string_view name) {
    Exponent e(vars.size(), 0);
    e[vars.index_of(name)] = 1;
    return monomial(vars, std::move(e), Rational(1));
  }
  static MultiPoly monomial(const VarList& vars, Exponent e, const Rational& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int k) { return k == 0; }));
  }
  Rational constant_term() const {
    for (const auto& [e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) return c;
    return Rational(0);
  }

  /// Rebinds an unbound constant to `vars`; no-op otherwise.
  MultiPoly bound_to(const VarList& vars) const {
    if (vars_ == vars) return *this;
    if (!vars_.empty()) throw std::invalid_argument("variable-list mismatch");
    return constant(vars, constant_term());
  }

  /// Re-expresses the polynomial over a variable list containing all of its
  /// variables (by name).
  MultiPoly embed(const VarList& target) const {
    if (vars_ == target) return *this;
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_[i]);
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
      Exponent ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  /// Inverse of embed: re-expresses the polynomial over `target`, which must
  /// contain every variable that actually occurs.
  MultiPoly restrict_to(const VarList& target) const {
    if (vars_ == target) return *this;
    std::vector<std::optional<std::size_t>> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.find(vars_[i]);
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
      Exponent ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!map[i]) throw std::invalid_argument("variable " + vars_[i] + " does not fit the target list");
        ne[*map[i]] = e[i];
      }
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  int min_degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = (d < 0) ? e[var] : std::min(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Coefficients with respect to one variable; the keys are powers and
  /// the values do not involve that variable.
  std::map<int, MultiPoly> as_univariate(std::size_t var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
      Exponent ne = e;
      int k = ne[var];
      ne[var] = 0;
      auto [it, inserted] = out.try_emplace(k, MultiPoly(vars_));
      it->second.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, Rational(1)); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, Rational(-1)); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const VarList vars = common_vars(a, b);
    MultiPoly r(vars);
    if (a.is_zero() || b.is_zero()) return r;
    const MultiPoly ab = a.bound_to(vars), bb = b.bound_to(vars);
    Exponent e(vars.size());
    for (const auto& [ea, ca] : ab.terms_) {
      for (const auto& [eb, cb] : bb.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
    return false;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Replaces variable `var` by `value` (which must share the variable list
  /// or be an unbound constant).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    const MultiPoly v = value.bound_to(vars_);
    MultiPoly r(vars_);
    std::map<int, MultiPoly> powers;
    for (const auto& [k, coef] : as_univariate(var)) {
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, v.pow(static_cast<unsigned>(k))).first;
      r += coef * it->second;
    }
    return r;
  }
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const {
    return substitute(vars_.index_of(var), value);
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point size mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const VarList vars = common_vars(a, b);
    MultiPoly r = a.bound_to(vars);
    const MultiPoly d = b.bound_to(vars);
    MultiPoly q(vars);
    const Exponent& lb = d.leading_exponent();
    const Rational& lc = d.leading_coefficient();
    Exponent e(vars.size());
    while (!r.is_zero()) {
      const Exponent& lr = r.leading_exponent();
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = lr[i] - lb[i];
        if (e[i] < 0) return std::nullopt;
      }
      MultiPoly t = monomial(vars, e, r.leading_coefficient() / lc);
      q += t;
      r -= t * d;
    }
    return q;
  }

  /// Multiplies by the inverse of the leading coefficient.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
  }

 private:
  static VarList common_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    if (a.vars_.empty() && a.is_constant()) return b.vars_;
    if (b.vars_.empty() && b.is_constant()) return a.vars_;
    throw std::invalid_argument("variable-list mismatch");
  }

  MultiPoly& accumulate(const MultiPoly& o, const Rational& sign) {
    const VarList vars = common_vars(*this, o);
    if (!(vars_ == vars)) *this = bound_to(vars);
    const MultiPoly ob = o.bound_to(vars);
    for (const auto& [e, c] : ob.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c * sign);
      if (!inserted) {
        it->second += c * sign;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  VarList vars_;
  TermMap terms_;
};

/// Human-readable form, highest term first: "x^2 - hbar^2", "2*x*hbar + 1".
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace kw
