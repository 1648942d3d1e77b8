// Frobenius, tensor squares and Lambda^2 of complexes.

#include <gtest/gtest.h>

#include "pfres/chartwo.hpp"
#include "pfres/koszul.hpp"
#include "test_util.hpp"

using namespace pfres;
using pfres::testing::matrix;
using pfres::testing::polys;

namespace {

using Q = Rationals;
using P = PrimeField;

template <Field F>
PresentedModule<F> residue_field(const RingPtr<F>& r) {
  Twists tw(r->nvars(), 1);
  PolyMatrix<F> m(r, 1, r->nvars());
  for (std::size_t i = 0; i < r->nvars(); ++i) m(0, i) = Polynomial<F>::variable(r, i);
  return PresentedModule<F>(GradedMap<F>(tw, {0}, m));
}

template <Field F>
std::vector<std::size_t> ranks(const FreeComplex<F>& c) {
  std::vector<std::size_t> out;
  for (int k = c.min_index(); k <= c.max_index(); ++k) out.push_back(c.rank(k));
  return out;
}

TEST(Frobenius, Additive) {
  auto r = make_ring(P(2), std::vector<std::string>{"x", "y"});
  GradedMap<P> m({1}, {0}, matrix(r, {{"x+y"}}));
  auto f = frobenius(m);
  EXPECT_EQ(f.matrix(), matrix(r, {{"x^2+y^2"}}));
  EXPECT_EQ(f.source(), (Twists{2}));
}

TEST(Frobenius, IdentityAndCharacteristic) {
  auto r = make_ring(P(2), 3);
  auto id = GradedMap<P>::identity(r, {0, 1, 3});
  EXPECT_EQ(frobenius(id), GradedMap<P>::identity(r, {0, 2, 6}));
  auto q = make_ring(Q{}, 2);
  EXPECT_THROW(frobenius(GradedMap<Q>::identity(q, {0})), std::invalid_argument);
}

TEST(Frobenius, KoszulStaysExact) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = make_ring(P(2), n);
    std::vector<Polynomial<P>> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial<P>::variable(r, i));
    auto k = koszul_complex(r, vars);
    auto f = frobenius(k);
    std::vector<Polynomial<P>> squares;
    for (const auto& v : vars) squares.push_back(v * v);
    EXPECT_EQ(f, koszul_complex(r, squares));
    EXPECT_TRUE(be_exactness_certificate(f).exact) << n;
  }
}

TEST(TensorSquare, RankOne) {
  auto r2 = make_ring(P(2), 2);
  auto ts = tensor_square_decomposition(r2, {3});
  EXPECT_TRUE(ts.lambda2.empty());
  EXPECT_EQ(ts.s2, (Twists{6}));
  EXPECT_EQ(*ts.frob, (Twists{6}));
  EXPECT_TRUE(tensor_square_defects(ts).empty());
}

TEST(TensorSquare, RankThreeCharTwo) {
  auto r = make_ring(P(2), 2);
  auto ts = tensor_square_decomposition(r, {0, 1, 1});
  EXPECT_EQ(ts.lambda2.size(), 3u);
  EXPECT_EQ(ts.d2.size(), 6u);
  EXPECT_EQ(ts.s2.size(), 6u);
  EXPECT_EQ(ts.frob->size(), 3u);
  auto defects = tensor_square_defects(ts);
  EXPECT_TRUE(defects.empty()) << (defects.empty() ? "" : defects[0]);
}

TEST(TensorSquare, RankTwoCharZero) {
  auto r = make_ring(Q{}, 2);
  auto ts = tensor_square_decomposition(r, {0, 2});
  EXPECT_EQ(ts.tensor.size(), 4u);
  EXPECT_EQ(ts.s2.size() + ts.lambda2.size(), 4u);
  EXPECT_EQ(ts.s2.size(), 3u);
  EXPECT_FALSE(ts.frob.has_value());
  EXPECT_TRUE(tensor_square_defects(ts).empty());
}

TEST(TensorSquare, AllTwistListsUpToRankSix) {
  auto r2 = make_ring(P(2), 2);
  auto r3 = make_ring(P(3), 2);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int shape = 0; shape < 3; ++shape) {
      Twists tw;
      for (std::size_t i = 0; i < n; ++i) tw.push_back(shape == 0 ? 0 : shape == 1 ? static_cast<int>(i) : static_cast<int>(i % 2) - 1);
      auto a = tensor_square_decomposition(r2, tw);
      EXPECT_TRUE(tensor_square_defects(a).empty()) << n;
      EXPECT_EQ(a.d2.size() - a.lambda2.size(), a.frob->size());
      EXPECT_TRUE(tensor_square_defects(tensor_square_decomposition(r3, tw)).empty()) << n;
    }
}

TEST(Lambda2, RankOneInDegreeZero) {
  auto r = make_ring(Q{}, 2);
  auto g = FreeComplex<Q>::single(r, 0, {1});
  auto l = lambda2_complex(g);
  EXPECT_EQ(l.complex.rank(0), 0u);
}

TEST(Lambda2, TermRanksFollowFormula) {
  // G^0 -> G^1 -> G^2 with ranks 3, 2, 2
  auto r = make_ring(Q{}, 3);
  FreeComplex<Q> g(r, -2, {{2, 2}, {1, 1}, {0, 0, 0}},
                   {GradedMap<Q>::zero(r, {1, 1}, {2, 2}), GradedMap<Q>::zero(r, {0, 0, 0}, {1, 1})});
  auto l = lambda2_complex(g);
  // H^0 = L2(3), H^1 = 3*2, H^2 = 3*2 + S2(2), H^3 = 2*2, H^4 = L2(2)
  EXPECT_EQ(ranks(l.complex), (std::vector<std::size_t>{1, 4, 9, 6, 3}));
  EXPECT_EQ(l.min_degree, 0);
  EXPECT_EQ(l.max_degree, 4);
  // rank(G (x) G)_i = rank S2(G)_i + rank Lambda2(G)_i
  std::vector<std::size_t> gr{3, 2, 2};
  for (int i = 0; i <= 4; ++i) {
    std::size_t tensor = 0, sym = 0;
    for (int p = 0; p <= 2; ++p) {
      int q = i - p;
      if (q < 0 || q > 2) continue;
      tensor += gr[p] * gr[q];
      if (p < q) sym += gr[p] * gr[q];
      if (p == q) sym += (p % 2 == 0) ? gr[p] * (gr[p] + 1) / 2 : gr[p] * (gr[p] - 1) / 2;
    }
    EXPECT_EQ(tensor, sym + l.complex.rank(-i)) << i;
  }
}

TEST(Lambda2, SplitSurjectionIsExactExceptDegreeZero) {
  // G: S^3 -> S, (x, y, 1)... kept graded: S(-1)^2 + S -> S with (x, y, 1); kernel free of rank 2
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z"});
  FreeComplex<Q> g(r, -1, {{0}, {1, 1, 0}}, {GradedMap<Q>({1, 1, 0}, {0}, matrix(r, {{"x", "y", "1"}}))});
  auto l = lambda2_complex(g);
  auto cert = certify_except_lowest(l.complex, ExactnessMode::acyclic);
  EXPECT_TRUE(cert.exact) << (cert.violations.empty() ? "" : cert.violations[0]);
  // H^0 of Lambda^2 G is Lambda^2 E, of rank 1 for E of rank 2
  auto ker = syzygies(l.complex.d(0));
  EXPECT_EQ(ker.cols(), 1u);
}

TEST(Lambda2, KoszulPunctured) {
  // cohomological G^0 = S(-1)^3 -> G^1 = S, exact as sheaves except in degree 0
  auto r = make_ring(P(101), 3);
  auto res = minimal_free_resolution(residue_field(r), 4);
  FreeComplex<P> g(r, -1, {res.module(0), res.module(1)}, {res.d(1)});
  auto l = lambda2_complex(g);
  EXPECT_TRUE(certify_except_lowest(l.complex, ExactnessMode::punctured).exact);
  EXPECT_FALSE(certify_except_lowest(l.complex, ExactnessMode::acyclic).exact);
  // the same three-term complex as the characteristic-free construction
  auto direct = lambda2_of_map(res.d(1));
  EXPECT_EQ(ranks(direct), ranks(l.complex));
}

TEST(Lambda2, MapCaseHilbertFunctionOfKernel) {
  // G = [S(-1)^2 -> S] by (x, y); H^0 of Lambda^2 G against Lambda^2 of the kernel (rank 1: free S(-2))
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  FreeComplex<Q> g(r, -1, {{0}, {1, 1}}, {GradedMap<Q>({1, 1}, {0}, matrix(r, {{"x", "y"}}))});
  auto l = lambda2_complex(g);
  auto ker = syzygies(l.complex.d(0));
  ModuleHilbert<Q> h(PresentedModule<Q>(syzygies(ker)));
  // ker(x, y) = S(-2), Lambda^2 of a rank-one module vanishes; here H^0 = ker(Lambda^2 S(-1)^2 -> S(-1)^2)
  for (int t = 0; t <= 6; ++t) EXPECT_EQ(h(t), 0) << t;
}

TEST(Lambda2, RejectsCharacteristicTwo) {
  auto r = make_ring(P(2), 2);
  EXPECT_THROW(lambda2_complex(FreeComplex<P>::single(r, 0, {0})), std::invalid_argument);
}

TEST(SecondPower, ResidueField) {
  auto r = make_ring(Q{}, 3);
  ModuleHilbert<Q> s2(second_power(residue_field(r), true));
  ModuleHilbert<Q> l2(second_power(residue_field(r), false));
  for (int t = -2; t <= 4; ++t) {
    EXPECT_EQ(s2(t), t == 0 ? 1 : 0);
    EXPECT_EQ(l2(t), 0);
  }
}

TEST(SecondPower, FreeModuleRanks) {
  auto r = make_ring(Q{}, 2);
  auto f = PresentedModule<Q>::free(r, {0, 0, 1});
  EXPECT_EQ(second_power(f, true).generators().size(), 6u);
  EXPECT_EQ(second_power(f, false).generators().size(), 3u);
}

TEST(MaxCohom, CotangentTypeOnP5) {
  auto r = make_ring(P(101), 6);
  auto rep = char2_max_cohom_check(residue_field(r), 1);
  EXPECT_TRUE(rep.symmetric);
  EXPECT_TRUE(rep.holds());
  std::int64_t total = 0;
  for (auto v : rep.row_2r) total += v;
  EXPECT_EQ(total, 1);
}

TEST(MaxCohom, CharTwoOnP5) {
  auto r = make_ring(P(2), 6);
  auto rep = char2_max_cohom_check(residue_field(r), 1);
  EXPECT_TRUE(rep.symmetric);
  EXPECT_TRUE(rep.holds());
}

TEST(MaxCohom, Preconditions) {
  auto r = make_ring(P(101), 5);
  EXPECT_THROW(char2_max_cohom_check(residue_field(r), 2), std::invalid_argument);
  EXPECT_THROW(char2_max_cohom_check(PresentedModule<P>::free(r, {0}), 1), std::invalid_argument);
  auto r2 = make_ring(P(2), 7);
  EXPECT_THROW(char2_max_cohom_check(residue_field(r2), 2), std::invalid_argument);
}

}  // namespace
