#include <gtest/gtest.h>

#include <random>

#include "kw/kostant/clebsch.hpp"

using namespace kw;

namespace {

const MultiPoly X = MultiPoly::variable(xh_vars(), "x");
const MultiPoly H = MultiPoly::variable(xh_vars(), "hbar");
MultiPoly c(const Rational& v) { return MultiPoly::constant(xh_vars(), v); }
RatFunc rf(const MultiPoly& p) { return RatFunc(p); }

// Closed-form oracle: prod_{k=(i-n)/2}^{i-1} (x + k hbar)^{-1}.
RatFunc expected_idiot(int n, int i) {
  MultiPoly den = c(1);
  for (int k = (i - n) / 2; k <= i - 1; ++k) den = den * (X + Rational(k) * H);
  return RatFunc(c(1), den);
}

TensorVec<MultiPoly> random_tensor(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> depth(0, 4), co(-3, 3), count(1, 5), lab(0, n);
  TensorVec<MultiPoly> t(n);
  for (int k = count(rng); k > 0; --k)
    t.add(-1 - 2 * depth(rng), -n + 2 * lab(rng), c(co(rng)) + Rational(co(rng)) * X + Rational(co(rng)) * H * X);
  return t;
}

// Casimir column computed from generator actions: (ef + fe + h^2/2) t.
TensorVec<MultiPoly> casimir_by_generators(const TensorVec<MultiPoly>& t) {
  auto g = [](Gen x, const TensorVec<MultiPoly>& v) { return tensor_act(x, v); };
  return g(Gen::e, g(Gen::f, t)) + g(Gen::f, g(Gen::e, t)) + c(Rational(1, 2)) * g(Gen::h, g(Gen::h, t));
}

Matrix<RatFunc> to_rf(const Matrix<MultiPoly>& m) { return m.map([](const MultiPoly& p) { return RatFunc(p.bound_to(xh_vars())); }); }

}  // namespace

TEST(Coinvariants, Examples) {
  for (int n = 0; n <= 3; ++n)
    for (int i = -n; i <= n; i += 2) {
      const auto v = coinvariant_reduce(TensorVec<MultiPoly>::basis(n, -1, i));
      for (int k = -n; k <= n; k += 2) EXPECT_EQ(v[label_index(n, k)], c(k == i ? 1 : 0));
    }
  const auto v = coinvariant_reduce(TensorVec<MultiPoly>::basis(1, -3, 1));
  EXPECT_EQ(v[label_index(1, 1)], c(1));
  EXPECT_EQ(v[label_index(1, -1)], -H);
}

TEST(Coinvariants, KillsImageOfFMinusOne) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = trial % 6;
    const auto t = random_tensor(rng, n);
    for (const auto& x : coinvariant_reduce(tensor_act(Gen::f, t) - t)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Coinvariants, RewriteOrderIndependent) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = trial % 6;
    const auto t = random_tensor(rng, n);
    const auto det = coinvariant_reduce(t);
    const auto rnd = coinvariant_reduce_random(t, rng);
    ASSERT_EQ(det.size(), rnd.size());
    for (std::size_t k = 0; k < det.size(); ++k) ASSERT_EQ(det[k], rnd[k]) << trial;
  }
}

TEST(Phi, RankZero) {
  const auto phi = phi_module(0);
  ASSERT_EQ(phi.casimir_matrix.rows(), 1u);
  EXPECT_EQ(phi.casimir_matrix(0, 0), Rational(1, 2) * (X * X - H * H));
  ASSERT_EQ(phi.annihilator.size(), 2u);
  EXPECT_EQ(phi.annihilator[0], H * H - X * X);
  EXPECT_EQ(phi.annihilator[1], c(2));
}

TEST(Phi, CasimirMatchesGeneratorOracle) {
  for (int n = 0; n <= 5; ++n) {
    const auto phi = phi_module(n);
    for (int i = -n; i <= n; i += 2) {
      const auto col = coinvariant_reduce(casimir_by_generators(TensorVec<MultiPoly>::basis(n, -1, i)));
      for (int r = -n; r <= n; r += 2) EXPECT_EQ(phi.casimir_matrix(label_index(n, r), label_index(n, i)), col[label_index(n, r)]);
    }
  }
}

TEST(Phi, RankTwoExplicit) {
  const auto phi = phi_module(2);
  const auto& m = phi.casimir_matrix;
  EXPECT_EQ(m(0, 0), Rational(1, 2) * ((X - Rational(2) * H) * (X - Rational(2) * H) - H * H));
  EXPECT_EQ(m(1, 1), Rational(1, 2) * (X * X - H * H));
  EXPECT_EQ(m(2, 2), Rational(1, 2) * ((X + Rational(2) * H) * (X + Rational(2) * H) - H * H));
  EXPECT_EQ(m(1, 0), Rational(2) * H);
  EXPECT_EQ(m(2, 1), Rational(4) * H);
  EXPECT_TRUE(m(0, 1).is_zero() && m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 0).is_zero());
}

TEST(Phi, CharacteristicPolynomialRankOne) {
  const auto phi = phi_module(1);
  const MultiPoly z = MultiPoly::variable(xhz_vars(), "z");
  Matrix<MultiPoly> zc(2, 2, MultiPoly(xhz_vars()));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 2; ++k) zc(r, k) = (r == k ? z : MultiPoly(xhz_vars())) - phi.casimir_matrix(r, k).embed(xhz_vars());
  EXPECT_EQ(Rational(4) * bareiss_determinant(zc), casimir_factor(-1) * casimir_factor(1));
}

TEST(Phi, AnnihilatorKillsCasimir) {
  for (int n = 0; n <= 6; ++n) {
    const auto phi = phi_module(n);
    EXPECT_TRUE(eval_matrix_polynomial(phi.annihilator, phi.casimir_matrix).is_zero()) << n;
    EXPECT_TRUE(casimir_factor_product(phi.casimir_matrix, weight_labels(n)).is_zero()) << n;
    // and no proper sub-product does (multiplicity-one spectrum)
    for (int drop = -n; drop <= n; drop += 2) {
      std::vector<int> sub;
      for (int i : weight_labels(n))
        if (i != drop) sub.push_back(i);
      EXPECT_FALSE(casimir_factor_product(phi.casimir_matrix, sub).is_zero()) << n << " " << drop;
    }
  }
}

TEST(Split, TopVectorAndKernel) {
  for (int n = 0; n <= 4; ++n) {
    const auto sp = highest_weight_split(n);
    EXPECT_EQ(sp.s.at(n), TensorVec<RatFunc>::basis(n, -1, n));
    for (const auto& [i, u] : sp.kernel) {
      EXPECT_TRUE(tensor_act(Gen::e, u).is_zero());
      EXPECT_TRUE(tensor_act(Gen::e, sp.s.at(i)).is_zero());
      EXPECT_EQ(u.coefficient(-1, i), rf(c(1)));
      for (const auto& [key, v] : u.terms()) EXPECT_EQ(key.first + key.second, i - 1);
    }
  }
}

TEST(Split, RankOneByHand) {
  const auto sp = highest_weight_split(1);
  TensorVec<RatFunc> u(1);
  u.add(-1, -1, rf(c(1)));
  u.add(-3, 1, RatFunc(c(-1), X - H));
  EXPECT_EQ(sp.kernel.at(-1), u);
  TensorVec<RatFunc> s(1);
  s.add(-1, -1, RatFunc(X - H, X));
  s.add(-3, 1, RatFunc(c(-1), X));
  EXPECT_EQ(sp.s.at(-1), s);
}

TEST(Split, CasimirEigenvalues) {
  for (int n = 0; n <= 6; ++n) {
    const auto sp = highest_weight_split(n);
    const auto cm = to_rf(phi_module(n).casimir_matrix);
    for (int i = -n; i <= n; i += 2) {
      const auto col = sp.sbar.column(label_index(n, i));
      const auto lhs = cm * col;
      const RatFunc ev = RatFunc(Rational(1, 2) * casimir_eigen2(i));
      for (std::size_t r = 0; r < col.size(); ++r) EXPECT_EQ(lhs[r], ev * col[r]) << n << " " << i;
      if (n <= 3) { EXPECT_EQ(tensor_act(casimir(), sp.s.at(i)), ev * sp.s.at(i)); }
    }
  }
}

TEST(Split, Unitriangular) {
  for (int n = 0; n <= 6; ++n) {
    const auto sp = highest_weight_split(n);
    for (std::size_t r = 0; r <= static_cast<std::size_t>(n); ++r)
      for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        if (r < k) { EXPECT_TRUE(sp.sbar(r, k).is_zero()) << n; }
        if (r == k) { EXPECT_EQ(sp.sbar(r, k), rf(c(1))) << n; }
      }
  }
}

TEST(Split, FiltrationCompatibility) {
  for (int n = 1; n <= 3; ++n) {
    const auto sp = highest_weight_split(n);
    const auto pinv = inverse(sp.sbar);
    for (int i = -n; i <= n; i += 2)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b)
          for (int e = 0; e <= 2; ++e) {
            const auto img = coinvariant_reduce(tensor_act(PBWElem::monomial(a, b, e), sp.s.at(i)));
            const auto coords = pinv * img;
            for (int j = -n; j < i; j += 2) EXPECT_TRUE(coords[label_index(n, j)].is_zero()) << n << i << a << b << e;
          }
  }
}

TEST(Idiot, Examples) {
  const auto one = idiot_expansion(1);
  EXPECT_EQ(one.at(-1), rf(c(1)));
  EXPECT_EQ(one.at(1), RatFunc(c(1), X));
  EXPECT_EQ(to_string(one.at(1)), "1/x");
  EXPECT_EQ(idiot_json(one).dump(), R"({"-1":"1","1":"1/x"})");
  const auto two = idiot_expansion(2);
  // (n + i)/2 = 1 factor, k = -1
  EXPECT_EQ(two.at(0), RatFunc(c(1), X - H));
  EXPECT_EQ(two.at(2), RatFunc(c(1), X * (X + H)));
}

TEST(Idiot, ProductFormula) {
  for (int n = 0; n <= 6; ++n) {
    const auto coeffs = idiot_expansion(n);
    ASSERT_EQ(coeffs.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(coeffs.at(-n), rf(c(1)));
    for (const auto& [i, v] : coeffs) EXPECT_EQ(v, expected_idiot(n, i)) << n << " " << i;
  }
}

TEST(Quasiclassical, SingleJordanBlock) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(quasiclassical_jordan(n), std::vector<int>{n + 1}) << n;
}

TEST(Clebsch, UnitObject) {
  for (int m = 0; m <= 3; ++m) {
    const auto rep = clebsch_convolution(m, 0);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.right_casimir, to_rf(phi_module(m).casimir_matrix));
  }
}

TEST(Clebsch, OneByOne) {
  const auto rep = clebsch_convolution(1, 1);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rank, 4u);
  // exactness proxy: 0 -> V0 -> V1 (x) V1 -> V2 -> 0 gives ranks 1 + 3 = 4
  EXPECT_EQ(rep.rank, phi_module(0).rank() + phi_module(2).rank());
  EXPECT_EQ(rep.multiplicities.at(0).first, 2u);
  EXPECT_EQ(rep.multiplicities.at(2).first, 1u);
  EXPECT_EQ(rep.multiplicities.at(-2).first, 1u);
}

TEST(Clebsch, TwoByOne) {
  const auto rep = clebsch_convolution(2, 1);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rank, 6u);
  const std::map<int, std::size_t> expected{{-3, 1}, {-1, 2}, {1, 2}, {3, 1}};
  for (const auto& [l, k] : expected) EXPECT_EQ(rep.multiplicities.at(l).first, k);
}

TEST(Clebsch, RejectsNegative) {
  EXPECT_THROW(phi_module(-1), DomainError);
  EXPECT_THROW(clebsch_convolution(-1, 2), DomainError);
}
