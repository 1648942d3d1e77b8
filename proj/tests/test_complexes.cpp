// Graded maps, complexes, resolutions, minimization, duals and the exactness criterion.

#include <gtest/gtest.h>

#include "pfres/exactness.hpp"
#include "pfres/koszul.hpp"
#include "pfres/random.hpp"
#include "pfres/resolution.hpp"
#include "test_util.hpp"

using namespace pfres;
using pfres::testing::matrix;
using pfres::testing::polys;
using pfres::testing::signed_permutation_isomorphic;

namespace {

using Q = Rationals;

RingPtr<Q> xyz() { return make_ring(Q{}, std::vector<std::string>{"x", "y", "z"}); }

std::vector<Twists> twist_lists(const FreeComplex<Q>& c) { return c.modules(); }

}  // namespace

TEST(GradedMap, DegreeCheck) {
  auto r = xyz();
  EXPECT_NO_THROW(GradedMap<Q>({2, 1}, {0}, matrix(r, {{"x^2", "y"}})));
  EXPECT_THROW(GradedMap<Q>({1, 1}, {0}, matrix(r, {{"x^2", "y"}})), DegreeError);
  EXPECT_THROW(GradedMap<Q>({2}, {0}, matrix(r, {{"x^2 + y"}})), DegreeError);
}

TEST(FreeComplex, CompositionEnforced) {
  auto r = xyz();
  GradedMap<Q> d1({1}, {0}, matrix(r, {{"x"}}));
  GradedMap<Q> d2({2}, {1}, matrix(r, {{"y"}}));
  EXPECT_THROW(FreeComplex<Q>::from_maps(r, 0, {d1, d2}), NotAComplex);
}

TEST(FreeHilbert, Binomials) {
  // dim S(-a)_t = C(N + t - a, N) on P^2
  EXPECT_EQ(free_hilbert(3, {0}, 2), 6);
  EXPECT_EQ(free_hilbert(3, {1}, 2), 3);
  EXPECT_EQ(free_hilbert(3, {3}, 2), 0);
}

TEST(Resolution, KoszulOfVariables) {
  auto r = xyz();
  GradedMap<Q> p({1, 1, 1}, {0}, matrix(r, {{"x", "y", "z"}}));
  auto c = minimal_free_resolution(PresentedModule<Q>(p), 10);
  EXPECT_EQ(twist_lists(c), (std::vector<Twists>{{0}, {1, 1, 1}, {2, 2, 2}, {3}}));
  EXPECT_TRUE(c.is_minimal());
  EXPECT_TRUE(signed_permutation_isomorphic(c, koszul_complex(r, polys(r, {"x", "y", "z"}))));
}

TEST(Resolution, FreeModule) {
  auto r = xyz();
  auto c = minimal_free_resolution(PresentedModule<Q>::free(r, {0, 2}), 5);
  EXPECT_EQ(c.min_index(), 0);
  EXPECT_EQ(c.max_index(), 0);
  EXPECT_EQ(c.module(0), (Twists{0, 2}));
}

TEST(Resolution, PrincipalIdeal) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto c = resolve_ideal(r, polys(r, {"x^2"}), 5);
  EXPECT_EQ(twist_lists(c), (std::vector<Twists>{{0}, {2}}));
}

TEST(Resolution, NonMinimalPresentationIsPruned) {
  auto r = xyz();
  // generators e0 (deg 0), e1 (deg 1) with relations e1 = x e0 and y e0 = 0: the module is S/(y)
  GradedMap<Q> p({1, 1}, {0, 1}, matrix(r, {{"x", "y"}, {"-1", "0"}}));
  auto c = minimal_free_resolution(PresentedModule<Q>(p), 5);
  EXPECT_EQ(twist_lists(c), (std::vector<Twists>{{0}, {1}}));
  EXPECT_EQ(c.d(1).matrix(), matrix(r, {{"y"}}));
}

TEST(Resolution, BettiIndependentOfGenerators) {
  auto r = make_ring(PrimeField(101), 4);
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial<PrimeField>> g{random_form(r, 2, rng), random_form(r, 2, rng), random_form(r, 2, rng)};
    auto c1 = resolve_ideal(r, g, 10);
    // a redundant, reordered generating set
    std::vector<Polynomial<PrimeField>> g2{g[2], g[0] + g[1], g[1],
                                           g[0] * parse_poly("x1", r) + g[2] * parse_poly("x3", r)};
    auto c2 = resolve_ideal(r, g2, 10);
    EXPECT_EQ(c1.betti(), c2.betti());
    for (int k = 1; k <= c1.max_index(); ++k) EXPECT_TRUE(c1.d(k - 1).compose(c1.d(k)).is_zero() || k == 1);
  }
}

TEST(Resolution, ExactOnRandomCyclicModules) {
  auto r = make_ring(PrimeField(101), 3);
  Rng rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial<PrimeField>> g{random_form(r, 2, rng, 0.4), random_form(r, 2, rng, 0.4),
                                          random_form(r, 3, rng, 0.3)};
    auto c = resolve_ideal(r, g, 10);
    EXPECT_TRUE(c.is_minimal());
    // ker d_k = im d_{k+1}: every syzygy of d_k lies in the image of d_{k+1}
    for (int k = 1; k <= c.max_index(); ++k) {
      auto ker = syzygies(c.d(k));
      MapGB<PrimeField> im(c.d(k + 1));
      for (std::size_t j = 0; j < ker.cols(); ++j) EXPECT_TRUE(im.in_image(ker.matrix().column(j)));
    }
    EXPECT_TRUE(be_exactness_certificate(c).exact);
  }
}

TEST(Minimize, IdentitySplitsOff) {
  auto r = xyz();
  auto c = FreeComplex<Q>::from_maps(r, 0, {GradedMap<Q>::identity(r, {0})});
  auto m = minimize(c);
  EXPECT_TRUE(m.empty());
}

TEST(Minimize, MinimalUnchanged) {
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  EXPECT_EQ(minimize(k), k);
}

TEST(Minimize, KoszulPlusTrivialSummand) {
  auto r = xyz();
  // Koszul(x,y) + [S(-1) -> S(-1)] placed in degrees 1 -> 0
  GradedMap<Q> d1({1, 1, 1}, {0, 1}, matrix(r, {{"x", "y", "0"}, {"0", "0", "1"}}));
  GradedMap<Q> d2({2}, {1, 1, 1}, matrix(r, {{"-y"}, {"x"}, {"0"}}));
  auto c = FreeComplex<Q>::from_maps(r, 0, {d1, d2});
  auto m = minimize(c);
  auto k = koszul_complex(r, polys(r, {"x", "y"}));
  EXPECT_EQ(m.betti(), k.betti());
  EXPECT_TRUE(m.is_minimal());
  EXPECT_EQ(minimize(m), m);
  // same cokernel Hilbert function
  ModuleHilbert<Q> h1{PresentedModule<Q>(c.d(1))}, h2{PresentedModule<Q>(m.d(1))};
  for (int t = -2; t < 8; ++t) EXPECT_EQ(h1(t), h2(t));
}

TEST(Minimize, MixedUnitsRandom) {
  // conjugating a minimal complex by a constant change of basis and adding a trivial summand
  auto r = make_ring(PrimeField(101), 3);
  auto k = koszul_complex(r, polys(r, {"x0", "x1^2", "x2"}));
  GradedMap<PrimeField> d1({0, 1, 2, 1}, {0, 0}, [&] {
    PolyMatrix<PrimeField> m(r, 2, 4);
    m(0, 1) = parse_poly("x0", r);
    m(0, 2) = parse_poly("x1^2", r);
    m(0, 3) = parse_poly("x2", r);
    m(1, 0) = parse_poly("3", r);
    m(1, 1) = parse_poly("x0", r);
    return m;
  }());
  auto ker = syzygies(d1);
  auto c = FreeComplex<PrimeField>::from_maps(r, 0, {d1, ker});
  auto m = minimize(c);
  EXPECT_EQ(m.betti().count({0, 0}), 1u);
  EXPECT_EQ(m.module(1), (Twists{1, 2, 1}));
  EXPECT_TRUE(m.is_minimal());
  ModuleHilbert<PrimeField> h1{PresentedModule<PrimeField>(c.d(1))}, h2{PresentedModule<PrimeField>(m.d(1))};
  for (int t = 0; t < 6; ++t) EXPECT_EQ(h1(t), h2(t));
  (void)k;
}

TEST(DualTwist, Bookkeeping) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto k = koszul_complex(r, polys(r, {"x^2", "y^2", "z^2"}));
  auto d = dual_twist(k, 6);
  EXPECT_EQ(d.module(0), (Twists{0}));
  EXPECT_EQ(d.module(1), (Twists{2, 2, 2}));
  EXPECT_EQ(d.module(3), (Twists{6}));
  // middle differential is minus the transpose
  EXPECT_EQ(d.d(2).matrix(), -k.d(2).matrix().transpose());
  EXPECT_EQ(d.d(1).matrix(), k.d(3).matrix().transpose());
}

TEST(DualTwist, Involution) {
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  EXPECT_EQ(dual_twist(dual_twist(k, 5), 5), k);  // odd length: exact identity
  auto k2 = koszul_complex(r, polys(r, {"x", "y"}));
  auto dd = dual_twist(dual_twist(k2, 2), 2);
  EXPECT_EQ(dd.modules(), k2.modules());
  for (int i = 1; i <= 2; ++i) EXPECT_EQ(dd.d(i).matrix(), -k2.d(i).matrix());
}

TEST(DualTwist, KoszulSelfDual) {
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  EXPECT_TRUE(signed_permutation_isomorphic(dual_twist(k, 3), k));
}

TEST(Exactness, KoszulFourVariables) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto k = koszul_complex(r, polys(r, {"x", "y", "z", "w"}));
  auto cert = be_exactness_certificate(k);
  EXPECT_TRUE(cert.exact);
  std::vector<std::size_t> ranks;
  for (const auto& p : cert.positions)
    if (p.index > 0) ranks.push_back(p.map_rank);
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
  // every I_{r_k}(d_k) is a power of the maximal ideal
  for (const auto& p : cert.positions) {
    if (p.index > 0) {
      EXPECT_EQ(p.grade, 4);
    }
  }
}

TEST(Exactness, Hypersurface) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto c = FreeComplex<Q>::from_maps(r, 0, {GradedMap<Q>({1}, {0}, matrix(r, {{"x"}}))});
  EXPECT_TRUE(be_exactness_certificate(c).exact);
  EXPECT_FALSE(be_exactness_certificate(c, ExactnessMode::acyclic).exact);
}

TEST(Exactness, ZeroMapFails) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto c = FreeComplex<Q>::from_maps(r, 0, {GradedMap<Q>::zero(r, {0}, {0})});
  auto cert = be_exactness_certificate(c);
  EXPECT_FALSE(cert.exact);
  ASSERT_FALSE(cert.violations.empty());
  EXPECT_NE(cert.violations[0].find("rank"), std::string::npos);
}

TEST(Exactness, RegularSequencesAlwaysExact) {
  auto r = make_ring(PrimeField(101), 4);
  Rng rng(6);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Polynomial<PrimeField>> f;
    for (int i = 0; i < n; ++i) f.push_back(random_form(r, static_cast<int>(rng.uniform(1, 2)), rng));
    EXPECT_TRUE(be_exactness_certificate(koszul_complex(r, f)).exact) << n;
  }
  // not regular: x*y, x*z
  auto k = koszul_complex(r, polys(r, {"x0*x1", "x0*x2"}));
  EXPECT_FALSE(be_exactness_certificate(k).exact);
}

TEST(Exactness, PuncturedMode) {
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  EXPECT_TRUE(be_exactness_certificate(k, ExactnessMode::punctured).exact);
  auto k2 = koszul_complex(r, polys(r, {"x", "y"}));
  EXPECT_FALSE(be_exactness_certificate(k2, ExactnessMode::punctured).exact);
}

TEST(EulerCharacteristic, Examples) {
  auto r3 = make_ring(Q{}, 4);
  EXPECT_EQ(euler_characteristic(FreeComplex<Q>::single(r3, 0, {0}), 0), 1);
  auto r7 = make_ring(Q{}, 8);
  EXPECT_EQ(euler_characteristic(FreeComplex<Q>::single(r7, 0, {0}), -9), -8);
  auto k = koszul_complex(r3, polys(r3, {"x0", "x1", "x2"}));
  // direct alternating binomial sum
  std::int64_t oracle = binomial(5 + 3, 3) - 3 * binomial(4 + 3, 3) + 3 * binomial(3 + 3, 3) - binomial(2 + 3, 3);
  EXPECT_EQ(euler_characteristic(k, 5), oracle);
  EXPECT_EQ(oracle, 1);
}

TEST(EulerCharacteristic, ExactComplexesVanish) {
  auto r = make_ring(Q{}, 4);
  auto k = koszul_complex(r, polys(r, {"x0", "x1", "x2", "x3"}));
  for (int m = -20; m <= 20; ++m) EXPECT_EQ(euler_characteristic(k, m), 0);
}

TEST(NaiveTruncate, Ranges) {
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  // shift to support [-2, 1]
  FreeComplex<Q> c(r, -2, k.modules(), k.maps());
  auto t = naive_truncate(c, 0, TruncateSide::at_least);
  EXPECT_EQ(t.min_index(), 0);
  EXPECT_EQ(t.max_index(), 1);
  EXPECT_EQ(t.d(1), c.d(1));
  EXPECT_EQ(naive_truncate(c, -5, TruncateSide::at_least), c);
  auto b = naive_truncate(c, 0, TruncateSide::below);
  EXPECT_EQ(b.max_index(), -1);
  EXPECT_EQ(b.min_index(), -2);
}

TEST(NaiveTruncate, ConcatenatedComplexKeepsResolutionPart) {
  // a resolution glued below index 0 to another piece: the nonnegative truncation is the resolution
  auto r = xyz();
  auto k = koszul_complex(r, polys(r, {"x", "y", "z"}));
  std::vector<Twists> mods{Twists{-1, 2}};
  std::vector<GradedMap<Q>> maps{GradedMap<Q>::zero(r, k.module(0), {-1, 2})};
  for (int i = 0; i <= 3; ++i) mods.push_back(k.module(i));
  for (int i = 1; i <= 3; ++i) maps.push_back(k.d(i));
  FreeComplex<Q> R(r, -1, mods, maps);
  EXPECT_EQ(naive_truncate(R, 0, TruncateSide::at_least), k);
}
