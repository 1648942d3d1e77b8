// Ext, local cohomology, sheaf cohomology tables, syzygy bundles and the duality check.

#include <gtest/gtest.h>

#include "pfres/cohomology.hpp"
#include "pfres/exactness.hpp"
#include "pfres/koszul.hpp"
#include "pfres/pfaffian.hpp"
#include "pfres/random.hpp"
#include "test_util.hpp"

using namespace pfres;
using pfres::testing::matrix;
using pfres::testing::polys;

namespace {

using Q = Rationals;
using P = PrimeField;

template <Field F>
PresentedModule<F> cyclic(const RingPtr<F>& r, const std::vector<Polynomial<F>>& gens) {
  Twists tw;
  PolyMatrix<F> m(r, 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    tw.push_back(gens[j].degree_status().degree);
    m(0, j) = gens[j];
  }
  return PresentedModule<F>(GradedMap<F>(tw, {0}, m));
}

template <Field F>
PresentedModule<F> residue_field(const RingPtr<F>& r, int shift = 0) {
  std::vector<Polynomial<F>> vars;
  for (std::size_t i = 0; i < r->nvars(); ++i) vars.push_back(Polynomial<F>::variable(r, i));
  auto m = cyclic(r, vars);
  return PresentedModule<F>(m.presentation().shifted(shift));
}

// h^i(O_{P^N}(t)) by the classical formulas
std::int64_t line_bundle_h(int i, int t, int N) {
  if (i == 0) return t >= 0 ? binomial(t + N, N) : 0;
  if (i == N) return t <= -N - 1 ? binomial(-t - 1, N) : 0;
  return 0;
}

TEST(Ext, ZeroOfFreeModule) {
  auto r = make_ring(Q{}, 3);
  auto e = ext_module(PresentedModule<Q>::free(r, {0}), 0);
  EXPECT_EQ(e.generators(), (Twists{3}));
  EXPECT_TRUE(ModuleHilbert<Q>(e)(2) == 0 && ModuleHilbert<Q>(e)(3) == 1);
  EXPECT_TRUE(ModuleHilbert<Q>(ext_module(PresentedModule<Q>::free(r, {0}), 1)).is_zero());
}

TEST(Ext, CanonicalModuleOfLinearSpace) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto e = ext_module(cyclic(r, polys(r, {"x", "y", "z"})), 3);
  ModuleHilbert<Q> hf(e);
  // S/(x,y,z)(-1): Hilbert function 1 from degree 1 on
  for (int t = -3; t <= 8; ++t) EXPECT_EQ(hf(t), t >= 1 ? 1 : 0) << t;
  EXPECT_EQ(hf.dimension(), 1);
  for (int j : {0, 1, 2, 4}) EXPECT_TRUE(ModuleHilbert<Q>(ext_module(cyclic(r, polys(r, {"x", "y", "z"})), j)).is_zero()) << j;
}

TEST(Ext, VanishesBelowGrade) {
  auto r = make_ring(P(101), 4);
  Rng rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Polynomial<P>> g;
    const int ngens = 1 + trial % 3;
    for (int i = 0; i < ngens; ++i) g.push_back(random_form(r, 2, rng, 0.5));
    const int codim = dimension(Ideal<P>(r, g)).codim;
    ExtCalculator<P> calc(cyclic(r, g));
    for (int j = 0; j < codim; ++j) EXPECT_TRUE(ModuleHilbert<P>(calc.ext(j)).is_zero()) << trial << " " << j;
    EXPECT_FALSE(ModuleHilbert<P>(calc.ext(codim)).is_zero()) << trial;
  }
}

TEST(LocalCohomology, PolynomialRingOfTwoVariables) {
  auto r = make_ring(Q{}, 2);
  auto tab = local_cohomology_dims(PresentedModule<Q>::free(r, {0}), Window{-6, 3});
  ASSERT_EQ(tab.rows(), 3);
  EXPECT_TRUE(tab.row_zero(0));
  EXPECT_TRUE(tab.row_zero(1));
  for (int t = -6; t <= 3; ++t) EXPECT_EQ(tab.at(2, t), monomial_count(2, -t - 2)) << t;
  EXPECT_EQ(tab.at(2, -3), 2);
}

TEST(LocalCohomology, ResidueField) {
  auto r = make_ring(Q{}, 3);
  auto tab = local_cohomology_dims(residue_field(r), Window{-4, 4});
  for (int i = 0; i < tab.rows(); ++i)
    for (int t = -4; t <= 4; ++t) EXPECT_EQ(tab.at(i, t), i == 0 && t == 0 ? 1 : 0) << i << " " << t;
}

TEST(LocalCohomology, FiniteLengthIsTorsion) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto m = cyclic(r, polys(r, {"x^2", "y^2"}));
  auto tab = local_cohomology_dims(m, Window{-3, 4});
  ModuleHilbert<Q> hf(m);
  for (int t = -3; t <= 4; ++t) EXPECT_EQ(tab.at(0, t), hf(t));
  EXPECT_TRUE(tab.row_zero(1));
  EXPECT_TRUE(tab.row_zero(2));
}

TEST(LocalCohomology, LengthMatchesTopExt) {
  // sum of dim H^0_m(M)_t against sum of dim Ext^{N+1}(M, S(-N-1))_{-t}
  auto r = make_ring(P(101), 3);
  Rng rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Polynomial<P>> g{random_form(r, 2, rng), random_form(r, 2, rng), random_form(r, 2, rng),
                                 random_form(r, 3, rng, 0.5)};
    auto m = cyclic(r, g);
    ModuleHilbert<P> hf(m);
    ASSERT_EQ(hf.dimension(), 0);
    std::int64_t len = 0;
    for (int t = 0; t <= 12; ++t) len += hf(t);
    ModuleHilbert<P> top(ext_module(m, 3));
    std::int64_t len_ext = 0;
    for (int t = -12; t <= 12; ++t) len_ext += top(t);
    EXPECT_EQ(len, len_ext);
  }
}

TEST(SheafCohomology, StructureSheafOfP3) {
  auto r = make_ring(Q{}, 4);
  auto tab = sheaf_cohomology_table(PresentedModule<Q>::free(r, {0}));
  EXPECT_EQ(tab.window.tmin, -5);
  EXPECT_EQ(tab.window.tmax, 5);
  for (int i = 0; i <= 3; ++i)
    for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) EXPECT_EQ(tab.at(i, t), line_bundle_h(i, t, 3)) << i << " " << t;
}

TEST(SheafCohomology, CompleteIntersectionIdealSheaf) {
  // (x^2,y^2,z^2) cuts out a length-8 scheme X in P^3, so H^1(I_X(t)) = 8 - dim (S/I)_t
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto k = koszul_complex(r, polys(r, {"x^2", "y^2", "z^2"}));
  // the ideal as a module: coker(d_2) = im(d_1)
  PresentedModule<Q> ideal(k.d(2));
  auto tab = sheaf_cohomology_table(ideal, Window{-4, 6});
  Ideal<Q> I(r, polys(r, {"x^2", "y^2", "z^2"}));
  auto hs = I.hilbert_series();
  for (int t = -4; t <= 6; ++t) {
    EXPECT_EQ(tab.at(0, t), monomial_count(4, t) - hs.value(t)) << t;
    EXPECT_EQ(tab.at(1, t), 8 - hs.value(t)) << t;
  }
  EXPECT_TRUE(tab.row_zero(2));
}

TEST(SheafCohomology, CompleteIntersectionCurveIsACM) {
  // in P^4 the same ideal cuts out an arithmetically Cohen-Macaulay curve X with omega_X = O_X(1),
  // so H^1(I_X) = 0 and H^2(I_X(t)) = H^1(O_X(t)) = dim (S/I)_{1-t}
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w", "v"});
  auto k = koszul_complex(r, polys(r, {"x^2", "y^2", "z^2"}));
  auto tab = sheaf_cohomology_table(PresentedModule<Q>(k.d(2)), Window{-6, 6});
  auto hs = Ideal<Q>(r, polys(r, {"x^2", "y^2", "z^2"})).hilbert_series();
  EXPECT_TRUE(tab.row_zero(1));
  for (int t = -6; t <= 6; ++t) EXPECT_EQ(tab.at(2, t), hs.value(1 - t)) << t;
  EXPECT_TRUE(tab.row_zero(3));
}

TEST(SheafCohomology, ResidueFieldVanishes) {
  auto r = make_ring(Q{}, 3);
  auto tab = sheaf_cohomology_table(residue_field(r));
  for (int i = 0; i < tab.rows(); ++i) EXPECT_TRUE(tab.row_zero(i)) << i;
}

TEST(SheafCohomology, EulerCharacteristicAgrees) {
  auto r = make_ring(P(101), 4);
  Rng rng(9);
  std::vector<Polynomial<P>> g{random_form(r, 2, rng, 0.5), random_form(r, 2, rng, 0.5), random_form(r, 3, rng, 0.3)};
  auto m = cyclic(r, g);
  auto res = minimal_free_resolution(m, 5);
  auto tab = sheaf_cohomology_table(m);
  for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) {
    std::int64_t chi = 0;
    for (int i = 0; i < tab.rows(); ++i) chi += (i % 2 ? -1 : 1) * tab.at(i, t);
    EXPECT_EQ(chi, euler_characteristic(res, t)) << t;
  }
}

TEST(SheafCohomology, SerreDualityForCotangentBundle) {
  auto r = make_ring(Q{}, 3);
  auto res = minimal_free_resolution(residue_field(r), 4);
  // E~ = ker(O(-1)^3 -> O) and its dual coker(O -> O(1)^3)
  PresentedModule<Q> e = horrocks_bundle(residue_field(r), 1, 2);
  PresentedModule<Q> dual(res.d(1).dual(0));
  Window w{-6, 6};
  auto te = sheaf_cohomology_table(e, w);
  auto td = sheaf_cohomology_table(dual, Window{-6 - 3, 6});
  for (int i = 0; i <= 2; ++i)
    for (int t = -6; t <= 6; ++t) EXPECT_EQ(te.at(i, t), td.at(2 - i, -t - 3)) << i << " " << t;
}

TEST(Horrocks, CotangentOfPlane) {
  auto r = make_ring(Q{}, 3);
  auto e = horrocks_bundle(residue_field(r), 1, 2);
  EXPECT_EQ(e.generators(), (Twists{2, 2, 2}));
  EXPECT_EQ(e.relations(), (Twists{3}));
  auto tab = sheaf_cohomology_table(e);
  for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) EXPECT_EQ(tab.at(1, t), t == 0 ? 1 : 0) << t;
}

TEST(Horrocks, ResidueFieldAllPositions) {
  for (int N = 2; N <= 4; ++N) {
    auto r = make_ring(P(101), static_cast<std::size_t>(N + 1));
    for (int i = 1; i < N; ++i) {
      auto tab = sheaf_cohomology_table(horrocks_bundle(residue_field(r), i, N));
      for (int j = 1; j < N; ++j)
        for (int t = tab.window.tmin; t <= tab.window.tmax; ++t)
          EXPECT_EQ(tab.at(j, t), j == i && t == 0 ? 1 : 0) << N << " " << i << " " << j << " " << t;
    }
  }
}

TEST(Horrocks, ShiftMovesSupport) {
  auto r = make_ring(Q{}, 4);
  auto tab = sheaf_cohomology_table(horrocks_bundle(residue_field(r, 2), 2, 3));
  for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) {
    EXPECT_EQ(tab.at(2, t), t == 2 ? 1 : 0) << t;
    EXPECT_EQ(tab.at(1, t), 0) << t;
  }
}

TEST(Horrocks, ArtinianQuotientRow) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z"});
  auto m = cyclic(r, polys(r, {"x^2", "y^2", "z^2"}));
  ModuleHilbert<Q> hf(m);
  auto tab = sheaf_cohomology_table(horrocks_bundle(m, 1, 2));
  for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) EXPECT_EQ(tab.at(1, t), hf(t)) << t;
}

TEST(Horrocks, Preconditions) {
  auto r = make_ring(Q{}, 3);
  EXPECT_THROW(horrocks_bundle(residue_field(r), 0, 2), std::invalid_argument);
  EXPECT_THROW(horrocks_bundle(residue_field(r), 2, 2), std::invalid_argument);
  EXPECT_THROW(horrocks_bundle(PresentedModule<Q>::free(r, {0}), 1, 2), std::invalid_argument);
  EXPECT_THROW(horrocks_bundle(residue_field(r), 1, 3), std::invalid_argument);
}

TEST(Duality, CompleteIntersectionInP4) {
  auto r = make_ring(Q{}, 5);
  auto k = koszul_complex(r, {Polynomial<Q>::variable(r, 0).pow(2), Polynomial<Q>::variable(r, 1).pow(2),
                              Polynomial<Q>::variable(r, 2).pow(2)});
  const int l = k.module(3)[0] - 5;
  EXPECT_EQ(l, 1);
  auto rep = duality_check(k, l);
  EXPECT_TRUE(rep.holds());
  for (int i = 1; i < 4; ++i) EXPECT_TRUE(rep.f2_table.row_zero(i));
}

TEST(Duality, PfaffianResolutions) {
  auto r = make_ring(P(101), 6);
  Rng rng(13);
  for (int t = 1; t <= 2; ++t) {
    PfaffianTwists tw({0, 0, 0, 1, 1}, t);
    auto c = build_pfaffian_resolution(tw, random_skew(r, tw, rng, 0.5));
    auto rep = duality_check(c, c.module(3)[0] - 6);
    EXPECT_TRUE(rep.holds()) << t;
  }
}

TEST(Duality, CorruptedTwistDetected) {
  auto r = make_ring(Q{}, 5);
  auto k = koszul_complex(r, {Polynomial<Q>::variable(r, 0).pow(2), Polynomial<Q>::variable(r, 1).pow(2),
                              Polynomial<Q>::variable(r, 2).pow(2)});
  Twists f2 = k.module(2);
  f2[0] += 1;
  auto rep = duality_check(PresentedModule<Q>::free(r, f2), PresentedModule<Q>::free(r, k.module(1)), 1, Window{-8, 8});
  EXPECT_FALSE(rep.holds());
}

TEST(AuslanderBuchsbaum, Examples) {
  auto r3 = make_ring(Q{}, std::vector<std::string>{"x", "y", "z"});
  auto a = ab_bounds_check(PresentedModule<Q>::free(r3, {0}));
  EXPECT_EQ(a.pd, 0);
  EXPECT_EQ(a.depth, 3);
  EXPECT_TRUE(a.holds());
  auto b = ab_bounds_check(cyclic(r3, polys(r3, {"x", "y", "z"})));
  EXPECT_EQ(b.pd, 3);
  EXPECT_EQ(b.depth, 0);
  auto r2 = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto c = ab_bounds_check(cyclic(r2, polys(r2, {"x"})));
  EXPECT_EQ(c.pd, 1);
  EXPECT_EQ(c.depth, 1);
  EXPECT_THROW(ab_bounds_check(cyclic(r2, polys(r2, {"1"}))), std::invalid_argument);
}

TEST(AuslanderBuchsbaum, RandomCyclicModules) {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    auto r = make_ring(P(101), static_cast<std::size_t>(3 + trial % 2));
    std::vector<Polynomial<P>> g;
    for (int i = 0; i < 2 + trial % 3; ++i) g.push_back(random_form(r, 1 + i % 2, rng, 0.4));
    auto rep = ab_bounds_check(cyclic(r, g));
    EXPECT_TRUE(rep.holds()) << trial;
  }
}

TEST(Table, Format) {
  CohomologyTable t;
  t.N = 1;
  t.window = {0, 1};
  t.h = {{1, 2}, {0, 3}};
  EXPECT_EQ(format_table(t), "     t  0  1\n   h^1  .  3\n   h^0  1  2\n");
}

}  // namespace
