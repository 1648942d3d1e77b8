// Recovering skew matrices from Gorenstein codimension-3 ideals.

#include <gtest/gtest.h>

#include "pfres/koszul.hpp"
#include "pfres/structure.hpp"
#include "test_util.hpp"

using namespace pfres;
using pfres::testing::matrix;
using pfres::testing::polys;

namespace {

using Q = Rationals;
using P = PrimeField;

template <Field F>
std::vector<std::size_t> shape(const FreeComplex<F>& c) {
  std::vector<std::size_t> r;
  for (int k = c.min_index(); k <= c.max_index(); ++k) r.push_back(c.rank(k));
  return r;
}

// a constant matrix with exactly one nonzero entry, equal to +-1, in each row and column
template <Field F>
bool is_signed_permutation(const PolyMatrix<F>& m) {
  if (m.rows() != m.cols()) return false;
  const F& k = m.ring()->field();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [p, count] : {std::pair{&m(i, j), &row}, std::pair{&m(j, i), &col}}) {
        if (p->is_zero()) continue;
        if (!p->is_constant()) return false;
        auto c = p->leading_term().coeff;
        if (!k.is_one(c) && !k.is_one(k.neg(c))) return false;
        ++*count;
      }
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

TEST(Shape, KoszulSquares) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto g = gorenstein_shape(Ideal<Q>(r, polys(r, {"x^2", "y^2", "z^2"})));
  EXPECT_EQ(shape(g.complex), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(g.e, 6);
}

TEST(Shape, GenericLinearFiveByFive) {
  auto r = make_ring(P(101), 6);
  Rng rng(5);
  PfaffianTwists tw({0, 0, 0, 0, 0}, 1);
  auto g = gorenstein_shape(Ideal<P>(r, sub_pfaffians(random_skew(r, tw, rng))));
  EXPECT_EQ(shape(g.complex), (std::vector<std::size_t>{1, 5, 5, 1}));
  EXPECT_EQ(g.e, 5);
}

TEST(Shape, RejectsEachDefect) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "u", "v", "w"});
  auto defect = [&](std::initializer_list<const char*> gens) {
    try {
      gorenstein_shape(Ideal<Q>(r, polys(r, gens)));
    } catch (const ShapeError& e) {
      return std::optional<ShapeDefect>(e.defect());
    }
    return std::optional<ShapeDefect>();
  };
  EXPECT_EQ(defect({"x", "y"}), ShapeDefect::codim);
  EXPECT_EQ(defect({"1"}), ShapeDefect::not_proper);
  // (x,y,z)^2 is Cohen-Macaulay with three-dimensional socle
  EXPECT_EQ(defect({"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}), ShapeDefect::top_rank);
  // two planes meeting in a point: codimension 3 but not Cohen-Macaulay
  EXPECT_EQ(defect({"x*u", "x*v", "x*w", "y*u", "y*v", "y*w", "z*u", "z*v", "z*w"}), ShapeDefect::length);
}

TEST(Unimodular, TriangularInverse) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  auto a = matrix(r, {{"2", "x^2", "y"}, {"0", "1", "x"}, {"0", "0", "-1"}});
  auto inv = inverse_unimodular(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, PolyMatrix<Q>::identity(r, 3));
  EXPECT_FALSE(inverse_unimodular(matrix(r, {{"x", "0"}, {"0", "1"}})).has_value());
}

TEST(Psi, TwoGenerators) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y"});
  GorensteinResolution<Q> g{koszul_complex(r, polys(r, {"x", "y"})), 2};
  auto psi = build_psi(g);
  EXPECT_EQ(psi.matrix(), matrix(r, {{"-y"}, {"x"}}));
  EXPECT_EQ(psi.source(), (Twists{2}));
  auto phi = lift_phi(g, psi);
  EXPECT_EQ(phi.matrix(), matrix(r, {{"1"}}));
}

TEST(Psi, KoszulSquaresColumnsAnnihilated) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  auto g = gorenstein_shape(Ideal<Q>(r, polys(r, {"x^2", "y^2", "z^2"})));
  auto psi = build_psi(g);
  EXPECT_EQ(psi.cols(), 3u);
  EXPECT_TRUE(g.d1().compose(psi).is_zero());
  auto phi = lift_phi(g, psi);
  EXPECT_TRUE(is_signed_permutation(phi.matrix()));
  auto pairing = multiplication_pairing(g, phi);
  EXPECT_TRUE(is_signed_permutation(pairing.s2.matrix()));
  EXPECT_FALSE(pairing_defect(g, pairing));
}

TEST(Pfaffianize, KoszulSquares) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z", "w"});
  Ideal<Q> ideal(r, polys(r, {"x^2", "y^2", "z^2"}));
  auto res = pfaffianize(ideal);
  const auto& f = res.skew.matrix();
  EXPECT_FALSE(skew_defect(f));
  EXPECT_FALSE(res.symmetrized);
  // off-diagonal entries are the three squares up to sign
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto p = f(i, j);
      if (r->field().is_negative(p.leading_term().coeff)) p = -p;
      seen.push_back(to_string(p));
    }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::string>{"x^2", "y^2", "z^2"}));
  EXPECT_TRUE(Ideal<Q>(r, res.pfaffians).equals(ideal));
}

TEST(Pfaffianize, GenericLinearRoundTrip) {
  auto r = make_ring(P(101), 6);
  Rng rng(11);
  PfaffianTwists tw({0, 0, 0, 0, 0}, 1);
  auto a = random_skew(r, tw, rng);
  Ideal<P> ideal(r, sub_pfaffians(a));
  auto res = pfaffianize(ideal);
  EXPECT_TRUE(res.pairing.s2.matrix().is_constant());
  EXPECT_TRUE(inverse_constant(res.pairing.s2.matrix()).has_value());
  EXPECT_TRUE(res.phi.ring() == r);
  EXPECT_EQ(res.resolution.d2().compose(res.phi), res.psi);
  EXPECT_FALSE(skew_defect(res.skew.matrix()));
  EXPECT_TRUE(res.ideal_equal);
  EXPECT_TRUE(Ideal<P>(r, res.pfaffians).equals(ideal));
  EXPECT_EQ(res.skew.rows() % 2, 1u);
}

TEST(Pfaffianize, MixedDegreesOverRationals) {
  auto r = make_ring(Q{}, 4);
  Rng rng(3);
  for (int shift = 0; shift <= 1; ++shift) {
    PfaffianTwists tw({0, 0, 0, shift, shift}, 1);
    Ideal<Q> ideal(r, sub_pfaffians(random_skew(r, tw, rng, 0.4)));
    auto res = pfaffianize(ideal);
    EXPECT_FALSE(skew_defect(res.skew.matrix())) << shift;
    EXPECT_TRUE(Ideal<Q>(r, res.pfaffians).equals(ideal)) << shift;
  }
}

TEST(Pfaffianize, PairingIdentitiesHold) {
  auto r = make_ring(P(101), 5);
  Rng rng(8);
  PfaffianTwists tw({0, 0, 0}, 2);
  Ideal<P> ideal(r, sub_pfaffians(random_skew(r, tw, rng)));
  auto res = pfaffianize(ideal);
  EXPECT_FALSE(res.pairing_defect) << *res.pairing_defect;
  const auto& s2 = res.pairing.s2.matrix();
  EXPECT_EQ(s2 * res.resolution.d3().matrix(), res.resolution.d1().matrix().transpose());
}

TEST(Pfaffianize, RejectsCharacteristicTwo) {
  auto r = make_ring(P(2), std::vector<std::string>{"x", "y", "z"});
  EXPECT_THROW(pfaffianize(Ideal<P>(r, polys(r, {"x", "y", "z"}))), std::invalid_argument);
}

TEST(Pfaffianize, RejectsCodimTwo) {
  auto r = make_ring(Q{}, std::vector<std::string>{"x", "y", "z"});
  EXPECT_THROW(pfaffianize(Ideal<Q>(r, polys(r, {"x", "y"}))), ShapeError);
}

}  // namespace
