#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kw/exactalg/multipoly.hpp"

namespace kw {

/// Even, nonnegative degrees per variable; hbar always has degree 2.
class Grading {
 public:
  explicit Grading(std::map<std::string, int> degrees) : degrees_(std::move(degrees)) {
    degrees_["hbar"] = 2;
    for (const auto& [name, d] : degrees_)
      if (d < 0 || d % 2 != 0) throw std::invalid_argument("grading degree of " + name + " must be even and >= 0");
  }

  int degree_of(const std::string& var) const {
    auto it = degrees_.find(var);
    if (it == degrees_.end()) throw std::invalid_argument("ungraded variable: " + var);
    return it->second;
  }

  /// Degree of p if p is homogeneous, -1 otherwise (and for p = 0).
  int homogeneous_degree(const MultiPoly& p) const {
    int deg = -1;
    for (const auto& [e, c] : p.terms()) {
      int d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degree_of(p.vars()[i]);
      if (deg >= 0 && d != deg) return -1;
      deg = d;
    }
    return deg;
  }

 private:
  std::map<std::string, int> degrees_;
};

/// Power series in q truncated after q^max_degree.
struct HilbertSeries {
  int max_degree = 0;
  std::vector<std::uint64_t> coefficients;  // index = degree

  std::uint64_t at(int degree) const {
    return degree >= 0 && degree <= max_degree ? coefficients[static_cast<std::size_t>(degree)] : 0;
  }
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Hilbert series of a free commutative polynomial algebra on generators of
/// the given degrees: prod_j 1 / (1 - q^{d_j}), truncated.
inline HilbertSeries free_graded_hilbert(const std::vector<int>& generator_degrees, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  HilbertSeries s{max_degree, std::vector<std::uint64_t>(static_cast<std::size_t>(max_degree) + 1, 0)};
  s.coefficients[0] = 1;
  for (int d : generator_degrees) {
    if (d <= 0 || d % 2 != 0) throw std::invalid_argument("generator degrees must be positive and even");
    for (int k = d; k <= max_degree; ++k)
      s.coefficients[static_cast<std::size_t>(k)] += s.coefficients[static_cast<std::size_t>(k - d)];
  }
  return s;
}

}  // namespace kw
