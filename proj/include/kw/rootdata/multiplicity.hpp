#pragma once

#include <algorithm>
#include <map>
#include <set>

#include "kw/rootdata/root_system.hpp"

namespace kw {

/// Formal character of an irreducible representation: weight -> multiplicity.
using Character = std::map<Weight, long>;

/// All weights of the irreducible representation with highest weight
/// `lambda` (dominant) with their multiplicities, by Freudenthal's recursion.
inline Character irreducible_character(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw DomainError("highest weight must be dominant");

  // Weights of V(lambda): mu with dominant conjugate below lambda. Explore
  // downward from lambda along positive roots; the set is saturated.
  std::set<Weight> support{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (const auto& a : rs.positive_roots()) {
        Weight nu = mu - a;
        if (support.contains(nu) || !rs.dominates(lambda, rs.dominant_conjugate(nu))) continue;
        support.insert(nu);
        next.push_back(nu);
      }
    frontier = std::move(next);
  }

  // Process in order of increasing depth below lambda.
  std::vector<std::pair<Rational, Weight>> order;
  const Weight rho = rs.rho();
  for (const auto& mu : support) order.emplace_back(rs.inner(lambda - mu, rho), mu);
  std::sort(order.begin(), order.end());

  Character chi;
  const Rational top = rs.inner(lambda + rho, lambda + rho);
  for (const auto& [depth, mu] : order) {
    if (mu == lambda) {
      chi[mu] = 1;
      continue;
    }
    Rational sum(0);
    for (const auto& a : rs.positive_roots())
      for (Weight nu = mu + a; support.contains(nu); nu += a) {
        auto it = chi.find(nu);
        if (it != chi.end()) sum += Rational(2) * rs.inner(nu, a) * Rational(it->second);
      }
    const Rational denom = top - rs.inner(mu + rho, mu + rho);
    const Rational m = sum / denom;
    if (!m.is_integer() || m.sign() < 0) throw DomainError("Freudenthal recursion produced a non-integer multiplicity");
    if (!m.is_zero()) chi[mu] = m.to_long();
  }
  return chi;
}

/// Multiplicity of weight mu in the irreducible representation of highest
/// weight lambda.
inline long weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto chi = irreducible_character(rs, lambda);
  auto it = chi.find(mu);
  return it == chi.end() ? 0 : it->second;
}

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
inline long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  const Weight rho = rs.rho();
  Rational d(1);
  for (const auto& a : rs.positive_roots()) d *= rs.inner(lambda + rho, a) / rs.inner(rho, a);
  return d.to_long();
}

}  // namespace kw
