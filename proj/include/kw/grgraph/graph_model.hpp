#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kw/exactalg/json.hpp"
#include "kw/rootdata/multiplicity.hpp"

namespace kw {

/// Formal sum of graph modules O(Gamma_lambda)^{m_lambda}, where
/// Gamma_lambda = {(t1, t2, a) : t2 = t1 + a lambda}.
struct GraphModel {
  std::string type;
  std::map<Weight, long> mult;

  long total() const {
    long s = 0;
    for (const auto& [w, m] : mult) s += m;
    return s;
  }
  friend bool operator==(const GraphModel&, const GraphModel&) = default;
};

/// Associated graded of phi(V_lambda): one graph per weight, with the weight
/// multiplicity.
inline GraphModel graph_model(const RootSystem& rs, const Weight& highest) {
  if (highest.rank() != rs.rank()) throw DomainError("highest weight has the wrong rank");
  GraphModel g{rs.tag(), {}};
  for (const auto& [w, m] : irreducible_character(rs, highest)) g.mult[w] = m;
  return g;
}

/// O(Gamma_mu) * O(Gamma_nu) = O(Gamma_{mu+nu}), extended bilinearly.
inline GraphModel graph_convolve(const GraphModel& a, const GraphModel& b) {
  if (a.type != b.type) throw DomainError("graph models over different root systems");
  GraphModel out{a.type, {}};
  for (const auto& [mu, ma] : a.mult)
    for (const auto& [nu, mb] : b.mult) out.mult[mu + nu] += ma * mb;
  return out;
}

inline GraphModel graph_sum(const GraphModel& a, const GraphModel& b) {
  if (a.type != b.type) throw DomainError("graph models over different root systems");
  GraphModel out = a;
  for (const auto& [w, m] : b.mult) out.mult[w] += m;
  return out;
}

inline Json to_json(const GraphModel& g) {
  Json weights = Json::array();
  for (const auto& [w, m] : g.mult) weights.push_back({{"coords", w.coords}, {"mult", m}});
  return {{"type", g.type}, {"weights", std::move(weights)}};
}

// ---- Levi coarsening ----

using LeviSet = std::set<std::size_t>;

/// Weights of one class in X / Q_L, with the decomposition of that class
/// into irreducible representations of the Levi.
struct LeviCoset {
  std::vector<Rational> key;                      // root coordinates: exact off L, mod 1 on L
  GraphModel model;                                // full weights in this class
  std::vector<std::pair<Weight, long>> irreducibles;  // Levi highest weights (L-coordinates), multiplicity
};

/// Root system of the Levi: the Cartan submatrix on L (indices in increasing order).
inline RootSystem levi_root_system(const RootSystem& rs, const LeviSet& levi) {
  IntMatrix sub;
  for (std::size_t i : levi) {
    if (i >= rs.rank()) throw DomainError("Levi subset index out of range");
    std::vector<int> row;
    for (std::size_t j : levi) row.push_back(rs.cartan()[i][j]);
    sub.push_back(std::move(row));
  }
  std::string tag = rs.tag() + "{";
  for (std::size_t i : levi) tag += (tag.back() == '{' ? "" : ",") + std::to_string(i);
  return RootSystem(tag + "}", std::move(sub));
}

inline Weight restrict_to_levi(const Weight& w, const LeviSet& levi) {
  Weight r = Weight::zero(levi.size());
  std::size_t k = 0;
  for (std::size_t i : levi) r[k++] = w[i];
  return r;
}

namespace detail {

inline Rational frac_part(const Rational& q) {
  // q - floor(q), in [0, 1)
  const mpz_class num = q.numerator(), den = q.denominator();
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q - Rational(mpq_class(f));
}

inline std::vector<Rational> coset_key(const RootSystem& rs, const Weight& w, const LeviSet& levi) {
  auto c = rs.root_coordinates(w);
  for (std::size_t i : levi) c[i] = frac_part(c[i]);
  return c;
}

// Peels Levi-dominant highest weights off a character given on restricted
// coordinates; the class is a finite-dimensional Levi module, so this ends.
inline std::vector<std::pair<Weight, long>> decompose(const RootSystem& levi_rs, std::map<Weight, long> chi,
                                                      const std::map<Weight, Rational>& height) {
  std::vector<std::pair<Weight, long>> out;
  while (!chi.empty()) {
    const Weight* top = nullptr;
    for (const auto& [w, m] : chi)
      if (!top || height.at(*top) < height.at(w)) top = &w;
    const Weight hw = *top;
    const long m = chi.at(hw);
    if (m < 0 || !levi_rs.is_dominant(hw)) throw DomainError("class is not a Levi module");
    out.emplace_back(hw, m);
    for (const auto& [mu, k] : irreducible_character(levi_rs, hw)) {
      auto it = chi.find(mu);
      if (it == chi.end()) throw DomainError("class is not a Levi module");
      it->second -= m * k;
      if (it->second == 0) chi.erase(it);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Groups the weights of `model` by their image in X / Q_L and decomposes
/// each class under the Levi L.
inline std::map<std::vector<Rational>, LeviCoset> levi_coarsen(const RootSystem& rs, const GraphModel& model,
                                                               const LeviSet& levi) {
  const RootSystem lrs = levi_root_system(rs, levi);
  std::map<std::vector<Rational>, LeviCoset> out;
  for (const auto& [w, m] : model.mult) {
    auto key = detail::coset_key(rs, w, levi);
    auto [it, inserted] = out.try_emplace(key);
    if (inserted) {
      it->second.key = key;
      it->second.model.type = model.type;
    }
    it->second.model.mult[w] = m;
  }
  for (auto& [key, coset] : out) {
    std::map<Weight, long> chi;
    std::map<Weight, Rational> height;
    for (const auto& [w, m] : coset.model.mult) {
      const Weight r = restrict_to_levi(w, levi);
      if (chi.contains(r)) throw std::logic_error("restriction to the Levi is not injective on a class");
      chi[r] = m;
      Rational h(0);
      const auto c = rs.root_coordinates(w);
      for (std::size_t i : levi) h += c[i];
      height[r] = h;
    }
    coset.irreducibles = detail::decompose(lrs, std::move(chi), height);
  }
  return out;
}

/// Coarsening to L and then (inside each L-class, over the Levi root system of
/// L) to L' gives the same partition of the weights as coarsening to L'.
inline bool transitivity_check(const RootSystem& rs, const GraphModel& model, const LeviSet& big, const LeviSet& small) {
  if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
    throw DomainError("transitivity needs L' contained in L");
  using Part = std::set<std::map<Weight, long>>;
  Part direct;
  for (const auto& [k, c] : levi_coarsen(rs, model, small)) direct.insert(c.model.mult);

  const RootSystem lrs = levi_root_system(rs, big);
  LeviSet small_in_big;
  {
    std::size_t pos = 0;
    for (std::size_t i : big) {
      if (small.contains(i)) small_in_big.insert(pos);
      ++pos;
    }
  }
  Part staged;
  for (const auto& [k, c] : levi_coarsen(rs, model, big)) {
    // restricted weights live in the Levi's weight lattice; map back inside the class
    GraphModel restricted{lrs.tag(), {}};
    std::map<Weight, Weight> back;
    for (const auto& [w, m] : c.model.mult) {
      const Weight r = restrict_to_levi(w, big);
      restricted.mult[r] = m;
      back.emplace(r, w);
    }
    for (const auto& [k2, c2] : levi_coarsen(lrs, restricted, small_in_big)) {
      std::map<Weight, long> part;
      for (const auto& [r, m] : c2.model.mult) part[back.at(r)] = m;
      if (!staged.insert(part).second) return false;
    }
  }
  return staged == direct;
}

}  // namespace kw
