#ifndef PFRES_STRUCTURE_HPP
#define PFRES_STRUCTURE_HPP

// Recovering a skew matrix from a Gorenstein codimension-3 ideal.
//
// With 0 -> S(-e) --d3--> F_2 --d2--> F_1 --d1--> S the minimal resolution of S/I:
//   psi(e_i ^ e_j) = d1(e_i) e_j - d1(e_j) e_i        Lambda^2 F_1 -> ker d1
//   d2 phi = psi                                     phi : Lambda^2 F_1 -> F_2
//   d3 mu(a, b) = d1(a) b - phi(a ^ d2(b))           mu : F_1 x F_2 -> S(-e)
// s2 = (mu(e_i, f_k))_{ik} identifies F_2 with F_1^vee(-e), and f = d2 s2^{-1}. The
// determinant of s2 is a nonzero constant, so the adjugate inverts it over S.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfres/groebner.hpp"
#include "pfres/pfaffian.hpp"
#include "pfres/resolution.hpp"
#include "pfres/syzygy.hpp"

namespace pfres {

enum class ShapeDefect { not_proper, codim, length, top_rank };

class ShapeError : public std::invalid_argument {
 public:
  ShapeError(ShapeDefect d, const std::string& what) : std::invalid_argument(what), defect_(d) {}
  ShapeDefect defect() const { return defect_; }

 private:
  ShapeDefect defect_;
};

// Failure of one of the exact checks along the way.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Field F>
struct GorensteinResolution {
  FreeComplex<F> complex;
  int e = 0;

  GradedMap<F> d1() const { return complex.d(1); }
  GradedMap<F> d2() const { return complex.d(2); }
  GradedMap<F> d3() const { return complex.d(3); }
};

template <Field F>
GorensteinResolution<F> gorenstein_shape(const Ideal<F>& ideal) {
  const RingPtr<F>& ring = ideal.ring();
  auto dim = dimension(ideal);
  if (dim.empty) throw ShapeError(ShapeDefect::not_proper, "ideal is the unit ideal");
  if (dim.codim != 3)
    throw ShapeError(ShapeDefect::codim, "ideal has codimension " + std::to_string(dim.codim) + ", expected 3");
  auto c = resolve_ideal(ring, ideal.generators(), static_cast<int>(ring->nvars()) + 1);
  if (c.max_index() != 3)
    throw ShapeError(ShapeDefect::length,
                     "minimal resolution has length " + std::to_string(c.max_index()) + ", expected 3");
  if (c.rank(3) != 1)
    throw ShapeError(ShapeDefect::top_rank, "last module has rank " + std::to_string(c.rank(3)) + ", expected 1");
  return {c, c.module(3)[0]};
}

// Basis e_i ^ e_j (i < j) of Lambda^2 F_1, lexicographic.
inline std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i, j), i < j, in wedge_pairs(n)
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

template <Field F>
GradedMap<F> build_psi(const GorensteinResolution<F>& r) {
  const auto d1 = r.d1();
  const Twists& a = d1.source();
  const std::size_t n = a.size();
  const auto pairs = wedge_pairs(n);
  Twists src;
  PolyMatrix<F> m(d1.ring(), n, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [i, j] = pairs[c];
    src.push_back(a[i] + a[j]);
    m(i, c) = -d1(0, j);
    m(j, c) = d1(0, i);
  }
  GradedMap<F> psi(std::move(src), a, std::move(m));
  if (!d1.compose(psi).is_zero()) throw StructureError("d1 psi is not zero");
  return psi;
}

template <Field F>
GradedMap<F> lift_phi(const GorensteinResolution<F>& r, const GradedMap<F>& psi) {
  auto phi = lift_solve(r.d2(), psi);
  if (!phi) throw StructureError("psi does not lift through d2; the input is not a resolution");
  if (!(r.d2().compose(*phi) == psi)) throw StructureError("d2 phi differs from psi");
  return *phi;
}

template <Field F>
struct MultiplicationPairing {
  GradedMap<F> s1;  // F_1 -> F_2^vee(-e)
  GradedMap<F> s2;  // F_2 -> F_1^vee(-e)
};

template <Field F>
MultiplicationPairing<F> multiplication_pairing(const GorensteinResolution<F>& r, const GradedMap<F>& phi) {
  const auto d1 = r.d1(), d2 = r.d2(), d3 = r.d3();
  const RingPtr<F>& ring = d1.ring();
  const std::size_t n = d2.rows(), m = d2.cols();
  MapGB<F> solver(d3);
  PolyMatrix<F> mu(ring, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Polynomial<F>> rhs(m, Polynomial<F>(ring));
      rhs[k] = d1(0, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || d2(j, k).is_zero()) continue;
        const std::size_t w = wedge_index(n, std::min(i, j), std::max(i, j));
        const Polynomial<F> c = i < j ? d2(j, k) : -d2(j, k);
        for (std::size_t q = 0; q < m; ++q)
          if (!phi(q, w).is_zero()) rhs[q] -= c * phi(q, w);
      }
      auto x = solver.solve(rhs);
      if (!x) throw StructureError("multiplication F_1 x F_2 -> S(-e) does not lift through d3");
      mu(i, k) = (*x)[0];
    }
  const Twists& a = d1.source();
  const Twists& b = d2.source();
  Twists a_dual, b_dual;
  for (int t : a) a_dual.push_back(r.e - t);
  for (int t : b) b_dual.push_back(r.e - t);
  GradedMap<F> s2(b, a_dual, mu);
  GradedMap<F> s1(a, b_dual, mu.transpose());
  return {s1, s2};
}

// Empty when the pairing satisfies the three commutation identities, else the first failure.
template <Field F>
std::optional<std::string> pairing_defect(const GorensteinResolution<F>& r, const MultiplicationPairing<F>& p) {
  const auto d1 = r.d1(), d2 = r.d2(), d3 = r.d3();
  if (!(p.s2.matrix() * d3.matrix() == d1.matrix().transpose())) return "s2 d3 differs from d1^vee";
  if (!(d3.matrix().transpose() * p.s1.matrix() == d1.matrix())) return "d3^vee s1 differs from d1";
  if (!(p.s1.matrix() * d2.matrix() == -(d2.matrix().transpose() * p.s2.matrix())))
    return "s1 d2 differs from -d2^vee s2";
  return std::nullopt;
}

template <Field F>
struct PfaffianizationResult {
  GorensteinResolution<F> resolution;
  GradedMap<F> psi;
  GradedMap<F> phi;
  MultiplicationPairing<F> pairing;
  std::optional<std::string> pairing_defect;
  GradedMap<F> skew;  // f : F_1^vee(-e) -> F_1
  bool symmetrized = false;
  std::vector<Polynomial<F>> pfaffians;
  bool ideal_equal = false;
};

template <Field F>
PfaffianizationResult<F> pfaffianize(const Ideal<F>& ideal) {
  const RingPtr<F>& ring = ideal.ring();
  const F& k = ring->field();
  if (ring->characteristic() == 2) throw std::invalid_argument("pfaffianize: characteristic 2 is not supported");
  auto res = gorenstein_shape(ideal);
  const std::size_t n = res.complex.rank(1);
  if (res.complex.rank(2) != n) throw StructureError("F_1 and F_2 have different ranks");
  if (n % 2 == 0)
    throw StructureError("F_1 has even rank " + std::to_string(n) + "; a Gorenstein resolution has odd rank");
  auto psi = build_psi(res);
  auto phi = lift_phi(res, psi);
  auto pairing = multiplication_pairing(res, phi);
  auto defect = pairing_defect(res, pairing);
  auto inv = inverse_unimodular(pairing.s2.matrix());
  if (!inv) throw StructureError("s2 is not invertible: its determinant is not a nonzero constant");
  const auto d1 = res.d1();
  PolyMatrix<F> f = res.d2().matrix() * *inv;
  bool symmetrized = false;
  if (skew_defect(f)) {
    f = (f - f.transpose()).scaled(k.inv(k.from_int(2)));
    symmetrized = true;
    if (!(d1.matrix() * f).is_zero()) throw StructureError("symmetrized f is not annihilated by d1");
  }
  Twists src;
  for (int t : d1.source()) src.push_back(res.e - t);
  GradedMap<F> skew(std::move(src), d1.source(), f);
  if (auto v = skew.degree_violation()) throw StructureError("skew matrix is not graded: " + *v);
  auto g = sub_pfaffians(f);
  Ideal<F> back(ring, g);
  const bool equal = back.equals(ideal);
  if (!equal) throw StructureError("sub-Pfaffians of f do not generate the input ideal");
  return {res, psi, phi, pairing, defect, skew, symmetrized, g, equal};
}

}  // namespace pfres

#endif  // PFRES_STRUCTURE_HPP
