#include <gtest/gtest.h>

#include <random>
#include <string>

#include "kw/exactalg/matrix.hpp"
#include "kw/uhbar/modules.hpp"

using namespace kw;

namespace {

const MultiPoly kHbar = MultiPoly::variable(hbar_vars(), "hbar");
const MultiPoly kX = MultiPoly::variable(xh_vars(), "x");
const MultiPoly kXH = MultiPoly::variable(xh_vars(), "hbar");

MultiPoly hb_const(const Rational& c) { return MultiPoly::constant(hbar_vars(), c); }

// Independent oracle: normal ordering by rewriting words in e, h, f with
// ef -> fe + hbar h, eh -> he - 2 hbar e, hf -> fh - 2 hbar f, applied at a
// randomly chosen position until no rule applies.
class WordOracle {
 public:
  explicit WordOracle(unsigned seed) : rng_(seed) {}

  PBWElem normal_order(std::map<std::string, MultiPoly> words) {
    PBWElem out;
    while (!words.empty()) {
      auto node = words.extract(words.begin());
      const std::string w = node.key();
      const MultiPoly c = node.mapped();
      std::vector<std::size_t> bad;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rank(w[i]) > rank(w[i + 1])) bad.push_back(i);
      if (bad.empty()) {
        int a = 0, b = 0, e = 0;
        for (char ch : w) (ch == 'f' ? a : ch == 'h' ? b : e)++;
        out.add_term({a, b, e}, c);
        continue;
      }
      const std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng_)];
      const std::string pre = w.substr(0, i), post = w.substr(i + 2);
      const std::string pair = w.substr(i, 2);
      auto put = [&](const std::string& k, const MultiPoly& v) {
        auto [it, ins] = words.try_emplace(k, v);
        if (!ins) {
          it->second += v;
          if (it->second.is_zero()) words.erase(it);
        }
      };
      put(pre + pair[1] + pair[0] + post, c);
      if (pair == "ef") put(pre + "h" + post, kHbar * c);
      if (pair == "eh") put(pre + "e" + post, Rational(-2) * kHbar * c);
      if (pair == "hf") put(pre + "f" + post, Rational(-2) * kHbar * c);
    }
    return out;
  }

  PBWElem product(const PBWElem& u, const PBWElem& v) {
    std::map<std::string, MultiPoly> words;
    for (const auto& [m1, c1] : u.terms())
      for (const auto& [m2, c2] : v.terms()) {
        const std::string w = word(m1) + word(m2);
        MultiPoly c = c1 * c2;
        auto [it, ins] = words.try_emplace(w, c);
        if (!ins) it->second += c;
      }
    return normal_order(std::move(words));
  }

 private:
  static int rank(char c) { return c == 'f' ? 0 : c == 'h' ? 1 : 2; }
  static std::string word(const PBWMonomial& m) {
    return std::string(static_cast<std::size_t>(m[0]), 'f') + std::string(static_cast<std::size_t>(m[1]), 'h') +
           std::string(static_cast<std::size_t>(m[2]), 'e');
  }
  std::mt19937 rng_;
};

PBWElem random_pbw(std::mt19937& rng, int max_exp, int max_terms) {
  std::uniform_int_distribution<int> ex(0, max_exp), nterms(1, max_terms), co(-3, 3), deg(0, 2);
  PBWElem u;
  for (int t = nterms(rng); t > 0; --t) {
    MultiPoly c = hb_const(co(rng)) + Rational(co(rng)) * kHbar.pow(static_cast<unsigned>(deg(rng)));
    u = u + PBWElem::monomial(ex(rng), ex(rng), ex(rng), c);
  }
  return u;
}

// Matrices of e, h, f on V_n in the basis v_n, v_{n-2}, ..., v_{-n}, taken
// directly from the action table.
struct RepMatrices {
  Matrix<MultiPoly> e, h, f;
};

RepMatrices rep_matrices(int n) {
  const std::size_t d = static_cast<std::size_t>(n + 1);
  auto idx = [n](int i) { return static_cast<std::size_t>((n - i) / 2); };
  RepMatrices m{Matrix<MultiPoly>(d, d, MultiPoly(hbar_vars())), Matrix<MultiPoly>(d, d, MultiPoly(hbar_vars())),
                Matrix<MultiPoly>(d, d, MultiPoly(hbar_vars()))};
  for (int i = -n; i <= n; i += 2) {
    m.h(idx(i), idx(i)) = Rational(i) * kHbar;
    if (i - 2 >= -n) m.e(idx(i), idx(i - 2)) = Rational(n + i, 2) * kHbar;   // e v_{i-2}
    if (i + 2 <= n) m.f(idx(i), idx(i + 2)) = Rational(n - i, 2) * kHbar;    // f v_{i+2}
  }
  return m;
}

Matrix<MultiPoly> pbw_matrix(const PBWElem& u, const RepMatrices& m) {
  const std::size_t d = m.e.rows();
  Matrix<MultiPoly> out(d, d, MultiPoly(hbar_vars()));
  const auto id = Matrix<MultiPoly>::identity(d, hb_const(1), MultiPoly(hbar_vars()));
  for (const auto& [mono, c] : u.terms()) {
    Matrix<MultiPoly> t = id;
    for (int k = 0; k < mono[0]; ++k) t = t * m.f;
    for (int k = 0; k < mono[1]; ++k) t = t * m.h;
    for (int k = 0; k < mono[2]; ++k) t = t * m.e;
    out = out + c * t;
  }
  return out;
}

template <class V>
V rep_from_matrix_column(const Matrix<MultiPoly>& m, int n, int i) {
  V out(n);
  const std::size_t col = static_cast<std::size_t>((n - i) / 2);
  for (int k = -n; k <= n; k += 2) out.add(k, lift_coeff<MultiPoly>(m(static_cast<std::size_t>((n - k) / 2), col)));
  return out;
}

VermaVec<> random_verma(std::mt19937& rng) {
  std::uniform_int_distribution<int> depth(0, 3), co(-2, 2);
  VermaVec<> v;
  for (int k = 0; k <= depth(rng); ++k)
    v.add(-1 - 2 * k, MultiPoly::constant(xh_vars(), co(rng)) + Rational(co(rng)) * kX + Rational(co(rng)) * kXH);
  return v;
}

}  // namespace

TEST(PBW, DefiningRelations) {
  const PBWElem e = PBWElem::e(), h = PBWElem::h(), f = PBWElem::f();
  EXPECT_EQ(pbw_mul(e, f), PBWElem::monomial(1, 0, 1) + PBWElem::monomial(0, 1, 0, kHbar));
  // h e is already normal ordered; the relation he = eh + 2 hbar e shows up
  // when e h is straightened.
  EXPECT_EQ(pbw_mul(h, e), PBWElem::monomial(0, 1, 1));
  EXPECT_EQ(pbw_mul(h, f), PBWElem::monomial(1, 1, 0) - PBWElem::monomial(1, 0, 0, Rational(2) * kHbar));
  EXPECT_EQ(pbw_mul(e, h), PBWElem::monomial(0, 1, 1) - PBWElem::monomial(0, 0, 1, Rational(2) * kHbar));
}

TEST(PBW, EFSquared) {
  const PBWElem ef = pbw_mul(PBWElem::e(), PBWElem::f());
  const PBWElem sq = pbw_mul(ef, ef);
  const PBWElem expected = PBWElem::monomial(2, 0, 2) + PBWElem::monomial(1, 1, 1, Rational(3) * kHbar) +
                           PBWElem::monomial(1, 0, 1, Rational(-4) * kHbar.pow(2)) +
                           PBWElem::monomial(0, 2, 0, kHbar.pow(2));
  EXPECT_EQ(sq, expected);
  // V_3 matrix oracle: the normal form acts like (EF)^2.
  const auto m = rep_matrices(3);
  const auto efm = m.e * m.f;
  EXPECT_EQ(pbw_matrix(sq, m), efm * efm);
  // and on the Verma module, composing generator actions
  for (int j = -1; j >= -9; j -= 2) {
    VermaVec<> v = VermaVec<>::basis(j);
    VermaVec<> seq = v;
    for (int k = 0; k < 2; ++k) seq = verma_act(PBWElem::e(), verma_act(PBWElem::f(), seq));
    EXPECT_EQ(verma_act(sq, v), seq);
  }
}

TEST(PBW, MatchesWordRewritingOracle) {
  std::mt19937 rng(11);
  WordOracle oracle(99);
  for (int trial = 0; trial < 300; ++trial) {
    const PBWElem u = random_pbw(rng, 2, 3), v = random_pbw(rng, 2, 3);
    ASSERT_EQ(pbw_mul(u, v), oracle.product(u, v)) << trial;
  }
}

TEST(PBW, Associativity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const PBWElem a = random_pbw(rng, 2, 2), b = random_pbw(rng, 2, 2), c = random_pbw(rng, 2, 2);
    ASSERT_EQ(pbw_mul(pbw_mul(a, b), c), pbw_mul(a, pbw_mul(b, c))) << trial;
  }
}

TEST(PBW, Specializations) {
  std::mt19937 rng(3);
  WordOracle oracle(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PBWElem u = random_pbw(rng, 2, 2), v = random_pbw(rng, 2, 2);
    const PBWElem uv = pbw_mul(u, v);
    // hbar = 0: the symbols multiply as commutative monomials.
    PBWElem comm;
    const PBWElem u0 = u.at_hbar(0), v0 = v.at_hbar(0);
    for (const auto& [m1, c1] : u0.terms())
      for (const auto& [m2, c2] : v0.terms())
        comm.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    EXPECT_EQ(uv.at_hbar(0), comm);
    EXPECT_EQ(pbw_mul(v, u).at_hbar(0), comm);
    // hbar = 1: classical U(sl2) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    EXPECT_EQ(uv.at_hbar(1), oracle.product(u.at_hbar(1), v.at_hbar(1)).at_hbar(1));
  }
}

TEST(Casimir, Central) {
  const PBWElem c = casimir();
  for (const auto& g : {PBWElem::e(), PBWElem::h(), PBWElem::f()}) EXPECT_TRUE((pbw_mul(c, g) - pbw_mul(g, c)).is_zero());
  EXPECT_EQ(c, pbw_mul(PBWElem::e(), PBWElem::f()) + pbw_mul(PBWElem::f(), PBWElem::e()) +
                   MultiPoly(Rational(1, 2)) * pbw_mul(PBWElem::h(), PBWElem::h()));
}

TEST(Casimir, Eigenvalues) {
  const auto top = verma_act(casimir(), VermaVec<>::basis(-1));
  EXPECT_EQ(top, Rational(1, 2) * (kX * kX - kXH * kXH) * VermaVec<>::basis(-1));
  for (int n = 0; n <= 8; ++n) {
    const auto v = rep_act(casimir(), RepVec<>::basis(n, n));
    EXPECT_EQ(v, lift_coeff<MultiPoly>(Rational(n * n + 2 * n, 2) * kHbar.pow(2)) * RepVec<>::basis(n, n));
  }
}

TEST(Verma, GeneratorExamples) {
  EXPECT_EQ(verma_act(PBWElem::f(), VermaVec<>::basis(-1)), VermaVec<>::basis(-3));
  EXPECT_TRUE(verma_act(PBWElem::e(), VermaVec<>::basis(-1)).is_zero());
  // (ef - fe) m_{-1} = hbar h m_{-1} forces e m_{-3} = hbar (x - hbar) m_{-1}
  EXPECT_EQ(verma_act(PBWElem::e(), VermaVec<>::basis(-3)), kXH * (kX - kXH) * VermaVec<>::basis(-1));
  EXPECT_EQ(verma_act(PBWElem::h(), VermaVec<>::basis(-5)), (kX - Rational(5) * kXH) * VermaVec<>::basis(-5));
}

TEST(Rep, GeneratorExamples) {
  EXPECT_EQ(rep_act(PBWElem::f(), RepVec<>::basis(2, 2)), lift_coeff<MultiPoly>(kHbar) * RepVec<>::basis(2, 0));
  EXPECT_EQ(rep_act(PBWElem::e(), RepVec<>::basis(2, 0)), lift_coeff<MultiPoly>(Rational(2) * kHbar) * RepVec<>::basis(2, 2));
  EXPECT_EQ(rep_act(PBWElem::h(), RepVec<>::basis(2, -2)), lift_coeff<MultiPoly>(Rational(-2) * kHbar) * RepVec<>::basis(2, -2));
  EXPECT_TRUE(rep_act(PBWElem::f(), RepVec<>::basis(3, -3)).is_zero());
  EXPECT_TRUE(rep_act(PBWElem::e(), RepVec<>::basis(3, 3)).is_zero());
  EXPECT_THROW(RepVec<>::basis(2, 1), std::invalid_argument);
}

TEST(Rep, MatchesMatrixTable) {
  std::mt19937 rng(21);
  for (int n = 0; n <= 6; ++n) {
    const auto m = rep_matrices(n);
    for (int t = 0; t < 20; ++t) {
      const PBWElem u = random_pbw(rng, 2, 2);
      const auto mat = pbw_matrix(u, m);
      for (int i = -n; i <= n; i += 2)
        ASSERT_EQ(rep_act(u, RepVec<>::basis(n, i)), rep_from_matrix_column<RepVec<>>(mat, n, i));
    }
  }
}

TEST(Relations, HoldAsOperators) {
  std::mt19937 rng(5);
  const PBWElem e = PBWElem::e(), h = PBWElem::h(), f = PBWElem::f();
  const MultiPoly two_hbar = Rational(2) * kHbar;
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_verma(rng);
    auto act = [&](const PBWElem& g, const VermaVec<>& v) { return verma_act(g, v); };
    const auto hbar_m = lift_coeff<MultiPoly>(kHbar);
    EXPECT_TRUE((act(e, act(f, m)) + Rational(-1) * lift_coeff<MultiPoly>(MultiPoly(1L)) * act(f, act(e, m)) +
                 Rational(-1) * hbar_m * act(h, m)).is_zero());
    EXPECT_TRUE((act(h, act(e, m)) + Rational(-1) * lift_coeff<MultiPoly>(MultiPoly(1L)) * act(e, act(h, m)) +
                 Rational(-1) * lift_coeff<MultiPoly>(two_hbar) * act(e, m)).is_zero());
    EXPECT_TRUE((act(h, act(f, m)) + Rational(-1) * lift_coeff<MultiPoly>(MultiPoly(1L)) * act(f, act(h, m)) +
                 lift_coeff<MultiPoly>(two_hbar) * act(f, m)).is_zero());
  }
  for (int n = 0; n <= 8; ++n) {
    const auto m = rep_matrices(n);
    EXPECT_EQ(m.e * m.f - m.f * m.e, kHbar * m.h);
    EXPECT_EQ(m.h * m.e - m.e * m.h, two_hbar * m.e);
    EXPECT_EQ(m.h * m.f - m.f * m.h, Rational(-2) * kHbar * m.f);
  }
}

TEST(Actions, CompatibleWithProduct) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const PBWElem u = random_pbw(rng, 2, 2), v = random_pbw(rng, 2, 2);
    const PBWElem uv = pbw_mul(u, v);
    const auto m = random_verma(rng);
    ASSERT_EQ(verma_act(uv, m), verma_act(u, verma_act(v, m))) << trial;
    const int n = trial % 5;
    RepVec<> w(n);
    for (int i = -n; i <= n; i += 2) w.add(i, lift_coeff<MultiPoly>(hb_const(i + trial % 3)));
    ASSERT_EQ(rep_act(uv, w), rep_act(u, rep_act(v, w))) << trial;
    TensorVec<> t(n);
    t.add(-1, n, MultiPoly::constant(xh_vars(), 1));
    t.add(-3, -n, kX);
    ASSERT_EQ(tensor_act(uv, t), tensor_act(u, tensor_act(v, t))) << trial;
  }
}

TEST(Tensor, Examples) {
  // n = 1: f (m_{-1} (x) v_1) = m_{-3} (x) v_1 + hbar m_{-1} (x) v_{-1}
  TensorVec<> expected(1);
  expected.add(-3, 1, MultiPoly::constant(xh_vars(), 1));
  expected.add(-1, -1, kXH);
  EXPECT_EQ(tensor_act(PBWElem::f(), TensorVec<>::basis(1, -1, 1)), expected);
  for (int n = 0; n <= 4; ++n)
    for (int i = -n; i <= n; i += 2)
      EXPECT_EQ(tensor_act(PBWElem::h(), TensorVec<>::basis(n, -1, i)),
                (kX + Rational(i - 1) * kXH) * TensorVec<>::basis(n, -1, i));
  EXPECT_TRUE(tensor_act(PBWElem::e(), TensorVec<>(2)).is_zero());
}

TEST(Tensor, WeightCompatibility) {
  for (int n = 0; n <= 4; ++n)
    for (int j = -1; j >= -7; j -= 2)
      for (int i = -n; i <= n; i += 2) {
        const auto t = TensorVec<>::basis(n, j, i);
        EXPECT_EQ(tensor_act(PBWElem::h(), t), (kX + Rational(i + j) * kXH) * t);
        for (auto [g, shift] : {std::pair{Gen::e, 2}, std::pair{Gen::f, -2}}) {
          const auto gt = tensor_act(g, t);
          for (const auto& [key, c] : gt.terms()) EXPECT_EQ(key.first + key.second, i + j + shift);
        }
      }
}

TEST(PBW, Json) {
  const auto j = to_json(casimir());
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0]["h"], 1);
  EXPECT_EQ(j["terms"][0]["coef"]["terms"][0]["coef"], "1/1");
}
