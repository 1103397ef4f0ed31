#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kw/exactalg/linear_solve.hpp"

namespace kw {

/// Integral weight in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }
  bool is_zero() const { return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; }); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Element of the Weyl group: a word in simple reflections together with its
/// action on weight coordinates.
struct WeylElement {
  std::vector<int> word;
  IntMatrix action;  // acts on column vectors of weight coordinates

  Weight apply(const Weight& w) const {
    Weight r = Weight::zero(w.rank());
    for (std::size_t i = 0; i < action.size(); ++i)
      for (std::size_t j = 0; j < action.size(); ++j) r[i] += action[i][j] * w[j];
    return r;
  }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

/// Finite root system given by a Cartan matrix with entries
/// cartan[i][j] = <alpha_j, alpha_i^vee>. Simple root alpha_j has
/// fundamental-weight coordinates given by column j.
class RootSystem {
 public:
  static constexpr std::size_t kMaxWeylOrder = 100000;

  RootSystem(std::string tag, IntMatrix cartan) : tag_(std::move(tag)), cartan_(std::move(cartan)) {
    validate();
    build_lengths();
    build_weyl_group();
    build_positive_roots();
  }

  /// "A1" | "A2" | "B2" | "G2"; anything else is rejected.
  static RootSystem from_tag(const std::string& tag) {
    if (tag == "A1") return RootSystem(tag, {{2}});
    if (tag == "A2") return RootSystem(tag, {{2, -1}, {-1, 2}});
    if (tag == "B2") return RootSystem(tag, {{2, -1}, {-2, 2}});
    if (tag == "G2") return RootSystem(tag, {{2, -1}, {-3, 2}});
    throw DomainError("unsupported root system type: " + tag);
  }

  const std::string& tag() const { return tag_; }
  std::size_t rank() const { return cartan_.size(); }
  const IntMatrix& cartan() const { return cartan_; }

  Weight simple_root(std::size_t j) const {
    Weight a = Weight::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i) a[i] = cartan_[i][j];
    return a;
  }
  Weight fundamental_weight(std::size_t i) const {
    Weight w = Weight::zero(rank());
    w[i] = 1;
    return w;
  }
  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }

  /// <lambda, alpha_i^vee>.
  int coroot_pairing(const Weight& lambda, std::size_t i) const { return lambda[i]; }

  Weight reflect(const Weight& lambda, std::size_t i) const {
    return lambda - lambda[i] * simple_root(i);
  }

  bool is_dominant(const Weight& lambda) const {
    return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](int c) { return c >= 0; });
  }

  Weight dominant_conjugate(Weight lambda) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rank(); ++i)
        if (lambda[i] < 0) {
          lambda = reflect(lambda, i);
          changed = true;
        }
    }
    return lambda;
  }

  /// Coordinates of a weight in the simple-root basis (rational in general).
  std::vector<Rational> root_coordinates(const Weight& lambda) const {
    std::vector<Rational> v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = Rational(lambda[i]);
    return cartan_inverse_ * v;
  }

  /// True iff lambda - mu is a nonnegative integer combination of simple roots.
  bool dominates(const Weight& lambda, const Weight& mu) const {
    for (const auto& c : root_coordinates(lambda - mu))
      if (!c.is_integer() || c.sign() < 0) return false;
    return true;
  }

  /// W-invariant bilinear form; the first simple root of each component has
  /// squared length 2.
  Rational inner(const Weight& mu, const Weight& nu) const {
    const auto c = root_coordinates(nu);
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) s += c[i] * Rational(mu[i]) * half_length_sq_[i];
    return s;
  }

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  std::set<Weight> weyl_orbit(const Weight& lambda) const {
    std::set<Weight> seen{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
      Weight w = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rank(); ++i) {
        Weight r = reflect(w, i);
        if (seen.insert(r).second) queue.push_back(std::move(r));
      }
    }
    return seen;
  }

 private:
  void validate() const {
    const std::size_t r = cartan_.size();
    for (const auto& row : cartan_)
      if (row.size() != r) throw DomainError("Cartan matrix must be square");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j && cartan_[i][j] != 2) throw DomainError("Cartan matrix diagonal must be 2");
        if (i != j && cartan_[i][j] > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
        if (i != j && (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
          throw DomainError("Cartan matrix zero pattern must be symmetric");
      }
  }

  // (alpha_i, alpha_i) / 2 from the symmetrizability condition
  // A_ij |alpha_i|^2 = A_ji |alpha_j|^2, propagated along the Dynkin graph.
  void build_lengths() {
    const std::size_t r = rank();
    half_length_sq_.assign(r, Rational(0));
    for (std::size_t start = 0; start < r; ++start) {
      if (!half_length_sq_[start].is_zero()) continue;
      half_length_sq_[start] = Rational(1);
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < r; ++j) {
          if (i == j || cartan_[i][j] == 0) continue;
          Rational lj = half_length_sq_[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
          if (half_length_sq_[j].is_zero()) {
            half_length_sq_[j] = lj;
            queue.push_back(j);
          } else if (!(half_length_sq_[j] == lj)) {
            throw DomainError("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    Matrix<Rational> a(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = Rational(cartan_[i][j]);
    try {
      cartan_inverse_ = inverse(a);
    } catch (const DomainError&) {
      throw DomainError("Cartan matrix is singular (not of finite type)");
    }
  }

  IntMatrix reflection_matrix(std::size_t i) const {
    IntMatrix m(rank(), std::vector<int>(rank(), 0));
    for (std::size_t k = 0; k < rank(); ++k) m[k][k] = 1;
    for (std::size_t k = 0; k < rank(); ++k) m[k][i] -= cartan_[k][i];
    return m;
  }

  static IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  }

  void build_weyl_group() {
    IntMatrix id(rank(), std::vector<int>(rank(), 0));
    for (std::size_t k = 0; k < rank(); ++k) id[k][k] = 1;
    std::map<IntMatrix, std::size_t> index{{id, 0}};
    weyl_.push_back({{}, id});
    for (std::size_t head = 0; head < weyl_.size(); ++head) {
      for (std::size_t i = 0; i < rank(); ++i) {
        IntMatrix m = multiply(reflection_matrix(i), weyl_[head].action);
        if (index.contains(m)) continue;
        if (weyl_.size() >= kMaxWeylOrder) throw DomainError("Weyl group too large or infinite");
        std::vector<int> word{static_cast<int>(i)};
        word.insert(word.end(), weyl_[head].word.begin(), weyl_[head].word.end());
        index.emplace(m, weyl_.size());
        weyl_.push_back({std::move(word), std::move(m)});
      }
    }
  }

  void build_positive_roots() {
    std::set<Weight> roots;
    for (std::size_t i = 0; i < rank(); ++i) {
      auto orbit = weyl_orbit(simple_root(i));
      roots.insert(orbit.begin(), orbit.end());
    }
    for (const auto& a : roots) {
      const auto c = root_coordinates(a);
      if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0; }))
        positive_roots_.push_back(a);
    }
  }

  std::string tag_;
  IntMatrix cartan_;
  std::vector<Rational> half_length_sq_;
  Matrix<Rational> cartan_inverse_;
  std::vector<WeylElement> weyl_;
  std::vector<Weight> positive_roots_;
};

}  // namespace kw
