#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "kw/grcoh/coh_module.hpp"
#include "kw/rootdata/select.hpp"

using namespace kw;

namespace {

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b) { return a * b - b * a; }

Matrix<Rational> scaled(const Matrix<Rational>& m, long c) {
  return m.map([c](const Rational& r) { return r * Rational(c); });
}

// Product of the (n+i)/2 linear forms x + k hbar evaluated at a rational point.
Rational generator_value(int n, int i, const Rational& x, const Rational& hb) {
  Rational v(1);
  for (int k = (i - n) / 2; k <= i - 1; ++k) v = v * (x + Rational(k) * hb);
  return v;
}

// Number of monomials of total degree `deg` in generators of the given degrees.
std::uint64_t count_monomials(const std::vector<int>& degs, int deg) {
  std::function<std::uint64_t(std::size_t, int)> rec = [&](std::size_t k, int left) -> std::uint64_t {
    if (k == degs.size()) return left == 0 ? 1 : 0;
    std::uint64_t s = 0;
    for (int used = 0; used <= left; used += degs[k]) s += rec(k + 1, left - used);
    return s;
  };
  return rec(0, deg);
}

}  // namespace

TEST(CohModule, Brackets) {
  for (int n = 0; n <= 10; ++n) {
    const auto c = sl2_action(n);
    EXPECT_EQ(commutator(c.e, c.f), c.h) << n;
    EXPECT_EQ(commutator(c.h, c.e), scaled(c.e, 2)) << n;
    EXPECT_EQ(commutator(c.h, c.f), scaled(c.f, -2)) << n;
  }
}

TEST(CohModule, MatrixEntries) {
  const auto c = sl2_action(3);
  // basis v_-3, v_-1, v_1, v_3
  EXPECT_EQ(c.h(0, 0), Rational(-3));
  EXPECT_EQ(c.h(3, 3), Rational(3));
  EXPECT_EQ(c.e(1, 0), Rational(1));   // e v_-3 = (3-1)/2 v_-1
  EXPECT_EQ(c.e(2, 1), Rational(2));
  EXPECT_EQ(c.e(3, 2), Rational(3));
  EXPECT_EQ(c.f(0, 1), Rational(3));   // f v_-1 = (3+3)/2 v_-3
  EXPECT_EQ(c.f(2, 3), Rational(1));
}

TEST(CohModule, RegularNilpotent) {
  for (int n = 0; n <= 8; ++n) {
    const auto c = sl2_action(n);
    Matrix<Rational> p = c.e;
    for (int k = 1; k <= n; ++k) {
      bool zero = true;
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) zero = zero && p(i, j) == Rational(0);
      EXPECT_FALSE(zero) << "e^" << k << " vanished for n=" << n;
      p = p * c.e;
    }
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) EXPECT_EQ(p(i, j), Rational(0));
    EXPECT_EQ(nilpotent_jordan_type(c.e), std::vector<int>{n + 1});
    if (n <= 5) { EXPECT_EQ(nilpotent_jordan_type(c.e), quasiclassical_jordan(n)) << n; }
  }
}

TEST(CohModule, GeneratorExamples) {
  const auto g = filtration_generators(2);
  const MultiPoly x = MultiPoly::variable(xh_vars(), "x");
  const MultiPoly hb = MultiPoly::variable(xh_vars(), "hbar");
  EXPECT_EQ(g.at(-2), MultiPoly::constant(xh_vars(), Rational(1)));
  EXPECT_EQ(g.at(0), x - hb);
  EXPECT_EQ(g.at(2), (x + hb) * x);
}

TEST(CohModule, GeneratorValues) {
  const Rational pts[][2] = {{Rational(3), Rational(1, 2)}, {Rational(-2, 7), Rational(5)}, {Rational(11), Rational(-3)}};
  for (int n = 0; n <= 7; ++n) {
    const auto g = filtration_generators(n);
    for (int i = -n; i <= n; i += 2) {
      EXPECT_EQ(g.at(i).total_degree(), (n + i) / 2);
      for (const auto& p : pts) EXPECT_EQ(g.at(i).evaluate({p[0], p[1]}), generator_value(n, i, p[0], p[1]));
      for (int k = (i - n) / 2; k <= i - 1; ++k)
        EXPECT_EQ(g.at(i).evaluate({Rational(-k) * Rational(3), Rational(3)}), Rational(0));
    }
  }
}

TEST(LatticeCompare, EqualUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    const auto r = lattice_compare(n);
    EXPECT_TRUE(r.coh_in_alg_polynomial) << n;
    EXPECT_TRUE(r.alg_in_coh_polynomial) << n;
    EXPECT_TRUE(r.equal()) << n;
  }
}

TEST(LatticeCompare, TransitionMatricesAreInverse) {
  for (int n = 0; n <= 4; ++n) {
    const auto r = lattice_compare(n);
    const auto prod = r.coh_in_alg * r.alg_in_coh;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        const Rational expect(i == j ? 1 : 0);
        EXPECT_EQ(prod(i, j).embed(xh_vars()).evaluate({Rational(7, 3), Rational(-2, 5)}), expect);
      }
  }
}

TEST(LatticeCompare, HighestClassIsLocalizedGenerator) {
  // The class of m_{-1} (x) v_{-n} has components 1/g_j.
  for (int n = 0; n <= 5; ++n) {
    const auto r = lattice_compare(n);
    for (int j = -n; j <= n; j += 2) {
      const Rational x(5, 3), hb(2, 7);
      EXPECT_EQ(r.alg_generators(label_index(n, j), 0).evaluate({x, hb}), Rational(1) / generator_value(n, j, x, hb));
    }
  }
}

TEST(LatticeCompare, DetectsWrongLattice) {
  // Multiplying the cohomology generators by hbar gives a strictly smaller lattice.
  const auto r = lattice_compare(2);
  const RatFunc hb(MultiPoly::variable(xh_vars(), "hbar"));
  const auto smaller = r.coh_generators.map([&](const RatFunc& v) { return v * hb; });
  const auto in_alg = detail::solve_columns(r.alg_generators, smaller);
  const auto back = detail::solve_columns(smaller, r.alg_generators);
  EXPECT_TRUE(detail::all_polynomial(in_alg));
  EXPECT_FALSE(detail::all_polynomial(back));
}

TEST(NormalCone, A1AgainstBruteForce) {
  const auto s = normal_cone_hilbert(RootSystem::from_tag("A1"), 16);
  const std::vector<int> expected_gens{4, 2, 2};
  EXPECT_EQ(s.generator_degrees, expected_gens);
  const std::uint64_t first[] = {1, 0, 2, 0, 4, 0, 6, 0, 9};
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(s.series.at(k), first[k]) << k;
  for (int k = 0; k <= 16; ++k) EXPECT_EQ(s.series.at(k), count_monomials(expected_gens, k)) << k;
}

TEST(NormalCone, DegreesPerType) {
  auto sorted = [](std::vector<int> v) { std::sort(v.begin(), v.end()); return v; };
  EXPECT_EQ(sorted(normal_cone_hilbert(RootSystem::from_tag("A2"), 4).generator_degrees), (std::vector<int>{2, 2, 4, 4, 6}));
  EXPECT_EQ(sorted(normal_cone_hilbert(RootSystem::from_tag("B2"), 4).generator_degrees), (std::vector<int>{2, 2, 4, 6, 8}));
  EXPECT_EQ(sorted(normal_cone_hilbert(RootSystem::from_tag("G2"), 4).generator_degrees), (std::vector<int>{2, 2, 4, 10, 12}));
  for (const char* t : {"A2", "B2", "G2"}) {
    const auto s = normal_cone_hilbert(RootSystem::from_tag(t), 20);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(s.series.at(k), count_monomials(s.generator_degrees, k)) << t << " " << k;
  }
}

TEST(NormalCone, RankZero) {
  const auto s = normal_cone_hilbert(parse_root_system(R"({"cartan": []})"), 6);
  EXPECT_EQ(s.generator_degrees, std::vector<int>{2});
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(s.series.at(k), k % 2 == 0 ? 1u : 0u);
}

TEST(NormalCone, Csv) {
  const auto s = normal_cone_hilbert(RootSystem::from_tag("A1"), 8);
  EXPECT_EQ(to_csv(s), "degree,coefficient\n0,1\n2,2\n4,4\n6,6\n8,9\n");
}

TEST(Json, CohModuleAndSeries) {
  const Json j = to_json(coh_module(1));
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["e"], Json::parse(R"([["0","0"],["1","0"]])"));
  EXPECT_EQ(j["generators"]["-1"], "1");
  EXPECT_EQ(j["generators"]["1"], "x");
  const Json s = to_json(normal_cone_hilbert(RootSystem::from_tag("A1"), 4));
  EXPECT_EQ(s["coefficients"], Json::parse("[1,0,2,0,4]"));
  EXPECT_EQ(to_json(lattice_compare(1))["equal"], true);
}
