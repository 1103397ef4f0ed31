#pragma once

#include <string>

#include "kw/exactalg/gcd.hpp"

namespace kw {

/// Quotient of two polynomials over the same variable list.
///
/// Values are kept reduced (numerator and denominator coprime, denominator
/// with leading coefficient 1), but equality is decided by
/// cross-multiplication and never relies on the reduced form.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1L) {}
  explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {}
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
  }
  explicit RatFunc(const Rational& c) : num_(c), den_(1L) {}

  static RatFunc constant(const VarList& vars, const Rational& c) {
    return RatFunc(MultiPoly::constant(vars, c));
  }
  static RatFunc variable(const VarList& vars, std::string_view name) {
    return RatFunc(MultiPoly::variable(vars, name));
  }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const VarList& vars() const { return num_.vars().empty() ? den_.vars() : num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The polynomial value, or nullopt if the denominator does not divide.
  std::optional<MultiPoly> as_polynomial() const { return divide_exact(num_, den_); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(MultiPoly(a.vars().empty() ? b.vars() : a.vars()));
    // Cross-cancel first so the products stay small.
    const MultiPoly g1 = poly_gcd(a.num_, b.den_);
    const MultiPoly g2 = poly_gcd(b.num_, a.den_);
    MultiPoly n = *divide_exact(a.num_, g1) * *divide_exact(b.num_, g2);
    MultiPoly d = *divide_exact(a.den_, g2) * *divide_exact(b.den_, g1);
    return RatFunc(std::move(n), std::move(d), Unscaled{});
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return a * RatFunc(b.den_, b.num_, Reduced{}).rescaled();
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RatFunc substitute(std::size_t var, const MultiPoly& value) const {
    return RatFunc(num_.substitute(var, value), den_.substitute(var, value));
  }
  RatFunc substitute(std::string_view var, const MultiPoly& value) const {
    return substitute(vars().index_of(var), value);
  }
  RatFunc embed(const VarList& target) const { return RatFunc(num_.embed(target), den_.embed(target), Reduced{}); }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_.evaluate(point) / d;
  }

 private:
  struct Reduced {};
  struct Unscaled {};
  RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  RatFunc(MultiPoly num, MultiPoly den, Unscaled) : num_(std::move(num)), den_(std::move(den)) { scale(); }

  RatFunc rescaled() const { RatFunc r = *this; r.scale(); return r; }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(den_.vars(), Rational(1));
      return;
    }
    if (!den_.is_constant()) {
      const MultiPoly g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
      }
    }
    scale();
  }
  void scale() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(den_.vars(), Rational(1));
      return;
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      const Rational inv = Rational(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

inline std::string to_string(const RatFunc& f) {
  const std::string n = to_string(f.numerator());
  if (f.denominator().is_constant()) return n;
  const std::string d = to_string(f.denominator());
  const bool wrap_num = f.numerator().num_terms() > 1;
  const bool wrap_den = d.find_first_of("*+- ") != std::string::npos;
  return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

}  // namespace kw
