#pragma once

#include <map>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <utility>

#include "kw/exactalg/ratfunc.hpp"
#include "kw/uhbar/pbw.hpp"

namespace kw {

enum class Gen { e, h, f };

/// Converts a polynomial in (x, hbar) or hbar alone to a coefficient of type C
/// (MultiPoly or RatFunc) over Q[x, hbar].
template <class C>
C lift_coeff(const MultiPoly& p) {
  if constexpr (std::is_same_v<C, MultiPoly>)
    return p.embed(xh_vars());
  else
    return C(p.embed(xh_vars()));
}

/// Finite linear combination of basis keys; zero coefficients are dropped.
template <class Key, class C>
class LinComb {
 public:
  using TermMap = std::map<Key, C>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C{} : it->second;
  }
  void add(const Key& k, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_all(const LinComb& o, const C& scale) {
    for (const auto& [k, c] : o.terms_) add(k, scale * c);
  }
  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

 private:
  TermMap terms_;
};

// ---- universal Verma module M(-rho) over Q[x, hbar] ----

/// sum_j c_j m_j with j odd and <= -1. m_{-1} has h-weight x - hbar.
template <class C = MultiPoly>
class VermaVec {
 public:
  static VermaVec basis(int j) {
    VermaVec v;
    v.add(j, lift_coeff<C>(MultiPoly(1L)));
    return v;
  }
  void add(int j, const C& c) {
    if (j > -1 || j % 2 == 0) throw std::invalid_argument("Verma basis index must be odd and <= -1");
    terms_.add(j, c);
  }
  const auto& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  C coefficient(int j) const { return terms_.coefficient(j); }
  friend bool operator==(const VermaVec& a, const VermaVec& b) { return a.terms_ == b.terms_; }
  friend VermaVec operator+(VermaVec a, const VermaVec& b) {
    a.terms_.add_all(b.terms_, lift_coeff<C>(MultiPoly(1L)));
    return a;
  }
  friend VermaVec operator*(const C& s, const VermaVec& a) {
    VermaVec r;
    r.terms_.add_all(a.terms_, s);
    return r;
  }

 private:
  LinComb<int, C> terms_;
};

/// Generator g on m_j: target index and coefficient in Q[x, hbar], or nullopt
/// for zero. h m_j = (x + j hbar) m_j, f m_j = m_{j-2},
/// e m_j = k hbar (x - k hbar) m_{j+2} with k = (-j-1)/2.
inline std::optional<std::pair<int, MultiPoly>> verma_generator(Gen g, int j) {
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  switch (g) {
    case Gen::h:
      return std::make_pair(j, x + Rational(j) * hb);
    case Gen::f:
      return std::make_pair(j - 2, MultiPoly::constant(xh_vars(), Rational(1)));
    case Gen::e: {
      const int k = (-j - 1) / 2;
      if (k == 0) return std::nullopt;
      return std::make_pair(j + 2, Rational(k) * hb * (x - Rational(k) * hb));
    }
  }
  return std::nullopt;
}

// ---- finite-dimensional V_n over Q[hbar] ----

/// sum_i c_i v_i in V_n, i in {-n, -n+2, ..., n}.
template <class C = MultiPoly>
class RepVec {
 public:
  explicit RepVec(int n) : n_(n) {
    if (n < 0) throw DomainError("V_n needs n >= 0");
  }
  static RepVec basis(int n, int i) {
    RepVec v(n);
    v.add(i, lift_coeff<C>(MultiPoly(1L)));
    return v;
  }
  int n() const { return n_; }
  void add(int i, const C& c) {
    if (i < -n_ || i > n_ || (n_ - i) % 2 != 0) throw std::invalid_argument("invalid V_n basis index");
    terms_.add(i, c);
  }
  const auto& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  C coefficient(int i) const { return terms_.coefficient(i); }
  friend bool operator==(const RepVec& a, const RepVec& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend RepVec operator+(RepVec a, const RepVec& b) {
    a.terms_.add_all(b.terms_, lift_coeff<C>(MultiPoly(1L)));
    return a;
  }
  friend RepVec operator*(const C& s, const RepVec& a) {
    RepVec r(a.n_);
    r.terms_.add_all(a.terms_, s);
    return r;
  }

 private:
  int n_;
  LinComb<int, C> terms_;
};

/// h v_i = i hbar v_i, e v_i = (n+i+2)/2 hbar v_{i+2}, f v_i = (n-i+2)/2 hbar v_{i-2}.
inline std::optional<std::pair<int, MultiPoly>> rep_generator(Gen g, int n, int i) {
  const MultiPoly hb = MultiPoly::variable(hbar_vars(), "hbar");
  switch (g) {
    case Gen::h:
      if (i == 0) return std::nullopt;
      return std::make_pair(i, Rational(i) * hb);
    case Gen::e:
      if (i == n) return std::nullopt;
      return std::make_pair(i + 2, Rational(n + i + 2, 2) * hb);
    case Gen::f:
      if (i == -n) return std::nullopt;
      return std::make_pair(i - 2, Rational(n - i + 2, 2) * hb);
  }
  return std::nullopt;
}

// ---- M(-rho) (x) V_n ----

/// sum c_{ji} m_j (x) v_i.
template <class C = MultiPoly>
class TensorVec {
 public:
  using Key = std::pair<int, int>;

  explicit TensorVec(int n) : n_(n) {
    if (n < 0) throw DomainError("V_n needs n >= 0");
  }
  static TensorVec basis(int n, int j, int i) {
    TensorVec t(n);
    t.add(j, i, lift_coeff<C>(MultiPoly(1L)));
    return t;
  }
  int n() const { return n_; }
  void add(int j, int i, const C& c) {
    if (j > -1 || j % 2 == 0) throw std::invalid_argument("Verma basis index must be odd and <= -1");
    if (i < -n_ || i > n_ || (n_ - i) % 2 != 0) throw std::invalid_argument("invalid V_n basis index");
    terms_.add({j, i}, c);
  }
  const auto& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  C coefficient(int j, int i) const { return terms_.coefficient({j, i}); }
  friend bool operator==(const TensorVec& a, const TensorVec& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend TensorVec operator+(TensorVec a, const TensorVec& b) {
    check(a, b);
    a.terms_.add_all(b.terms_, lift_coeff<C>(MultiPoly(1L)));
    return a;
  }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) {
    check(a, b);
    a.terms_.add_all(b.terms_, lift_coeff<C>(MultiPoly(-1L)));
    return a;
  }
  friend TensorVec operator*(const C& s, const TensorVec& a) {
    TensorVec r(a.n_);
    r.terms_.add_all(a.terms_, s);
    return r;
  }

 private:
  static void check(const TensorVec& a, const TensorVec& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("tensor vectors for different V_n");
  }
  int n_;
  LinComb<Key, C> terms_;
};

namespace detail {

template <class C>
VermaVec<C> verma_gen_act(Gen g, const VermaVec<C>& m) {
  VermaVec<C> out;
  for (const auto& [j, c] : m.terms())
    if (auto r = verma_generator(g, j)) out.add(r->first, lift_coeff<C>(r->second) * c);
  return out;
}

template <class C>
RepVec<C> rep_gen_act(Gen g, const RepVec<C>& w) {
  RepVec<C> out(w.n());
  for (const auto& [i, c] : w.terms())
    if (auto r = rep_generator(g, w.n(), i)) out.add(r->first, lift_coeff<C>(r->second) * c);
  return out;
}

template <class C>
TensorVec<C> tensor_gen_act(Gen g, const TensorVec<C>& t) {
  TensorVec<C> out(t.n());
  for (const auto& [key, c] : t.terms()) {
    const auto [j, i] = key;
    if (auto r = verma_generator(g, j)) out.add(r->first, i, lift_coeff<C>(r->second) * c);
    if (auto r = rep_generator(g, t.n(), i)) out.add(j, r->first, lift_coeff<C>(r->second) * c);
  }
  return out;
}

}  // namespace detail

template <class C>
VermaVec<C> verma_act(const PBWElem& u, const VermaVec<C>& m) {
  VermaVec<C> out;
  for (const auto& [mono, coef] : u.terms()) {
    VermaVec<C> w = m;
    for (int k = 0; k < mono[2] && !w.is_zero(); ++k) w = detail::verma_gen_act(Gen::e, w);
    for (int k = 0; k < mono[1] && !w.is_zero(); ++k) w = detail::verma_gen_act(Gen::h, w);
    for (int k = 0; k < mono[0] && !w.is_zero(); ++k) w = detail::verma_gen_act(Gen::f, w);
    out = out + lift_coeff<C>(coef) * w;
  }
  return out;
}

template <class C>
RepVec<C> rep_act(const PBWElem& u, const RepVec<C>& v) {
  RepVec<C> out(v.n());
  for (const auto& [mono, coef] : u.terms()) {
    RepVec<C> w = v;
    for (int k = 0; k < mono[2] && !w.is_zero(); ++k) w = detail::rep_gen_act(Gen::e, w);
    for (int k = 0; k < mono[1] && !w.is_zero(); ++k) w = detail::rep_gen_act(Gen::h, w);
    for (int k = 0; k < mono[0] && !w.is_zero(); ++k) w = detail::rep_gen_act(Gen::f, w);
    out = out + lift_coeff<C>(coef) * w;
  }
  return out;
}

/// Diagonal action: generators act by g (x) 1 + 1 (x) g.
template <class C>
TensorVec<C> tensor_act(const PBWElem& u, const TensorVec<C>& t) {
  TensorVec<C> out(t.n());
  for (const auto& [mono, coef] : u.terms()) {
    TensorVec<C> w = t;
    for (int k = 0; k < mono[2] && !w.is_zero(); ++k) w = detail::tensor_gen_act(Gen::e, w);
    for (int k = 0; k < mono[1] && !w.is_zero(); ++k) w = detail::tensor_gen_act(Gen::h, w);
    for (int k = 0; k < mono[0] && !w.is_zero(); ++k) w = detail::tensor_gen_act(Gen::f, w);
    out = out + lift_coeff<C>(coef) * w;
  }
  return out;
}

template <class C>
TensorVec<C> tensor_act(Gen g, const TensorVec<C>& t) {
  return detail::tensor_gen_act(g, t);
}

}  // namespace kw
