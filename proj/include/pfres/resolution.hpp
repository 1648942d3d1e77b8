#ifndef PFRES_RESOLUTION_HPP
#define PFRES_RESOLUTION_HPP

// Minimal free resolutions and operations on free complexes.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfres/syzygy.hpp"

namespace pfres {

namespace detail {

// Position of a nonzero constant entry, if any.
template <Field F>
std::optional<std::pair<std::size_t, std::size_t>> find_unit(const PolyMatrix<F>& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero() && m(i, j).is_constant()) return std::make_pair(i, j);
  return std::nullopt;
}

// A' = A - A[:,j] u^-1 A[i,:] with row i and column j removed.
template <Field F>
PolyMatrix<F> eliminate_unit(const PolyMatrix<F>& a, std::size_t i, std::size_t j) {
  const F& k = a.ring()->field();
  auto uinv = k.inv(a(i, j).constant_coefficient());
  PolyMatrix<F> r(a.ring(), a.rows() - 1, a.cols() - 1);
  for (std::size_t p = 0, rp = 0; p < a.rows(); ++p) {
    if (p == i) continue;
    for (std::size_t q = 0, rq = 0; q < a.cols(); ++q) {
      if (q == j) continue;
      Polynomial<F> v = a(p, q);
      if (!a(p, j).is_zero() && !a(i, q).is_zero()) v -= (a(p, j) * a(i, q)).scaled(uinv);
      r(rp, rq) = std::move(v);
      ++rq;
    }
    ++rp;
  }
  return r;
}

inline Twists erase_at(Twists t, std::size_t i) {
  t.erase(t.begin() + static_cast<long>(i));
  return t;
}

}  // namespace detail

// Presentation with no unit entries, defining an isomorphic module.
template <Field F>
GradedMap<F> prune_presentation(GradedMap<F> p) {
  while (auto u = detail::find_unit(p.matrix())) {
    auto [i, j] = *u;
    p = GradedMap<F>(detail::erase_at(p.source(), j), detail::erase_at(p.target(), i),
                     detail::eliminate_unit(p.matrix(), i, j));
  }
  return p;
}

// F_0 <- F_1 <- ... resolving coker(P), computed up to F_{length_bound}.
template <Field F>
FreeComplex<F> minimal_free_resolution(const PresentedModule<F>& m, int length_bound) {
  if (length_bound < 0) throw std::invalid_argument("length bound must be nonnegative");
  const RingPtr<F>& ring = m.ring();
  GradedMap<F> p = prune_presentation(m.presentation());
  p = minimal_image_generators(p);
  std::vector<Twists> mods{p.target()};
  std::vector<GradedMap<F>> maps;
  GradedMap<F> cur = p;
  for (int k = 1; k <= length_bound && cur.cols() > 0; ++k) {
    mods.push_back(cur.source());
    maps.push_back(cur);
    if (k == length_bound) break;
    cur = syzygies(cur);
  }
  return FreeComplex<F>(ring, 0, std::move(mods), std::move(maps));
}

// Resolution of S/I.
template <Field F>
FreeComplex<F> resolve_ideal(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int length_bound) {
  Twists tw;
  std::vector<std::vector<Polynomial<F>>> row{{}};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto st = g.degree_status();
    if (st.kind != DegreeKind::homogeneous) throw std::invalid_argument("ideal generator is not homogeneous");
    tw.push_back(st.degree);
    row[0].push_back(g);
  }
  PolyMatrix<F> mat(ring, 1, tw.size());
  for (std::size_t j = 0; j < tw.size(); ++j) mat(0, j) = row[0][j];
  return minimal_free_resolution(PresentedModule<F>(GradedMap<F>(tw, {0}, std::move(mat))), length_bound);
}

// Splits off every trivial summand [S(-a) --unit--> S(-a)].
template <Field F>
FreeComplex<F> minimize(const FreeComplex<F>& c) {
  if (c.empty()) return c;
  const int lo = c.min_index();
  std::vector<Twists> mods = c.modules();
  std::vector<PolyMatrix<F>> mats;
  for (const auto& d : c.maps()) mats.push_back(d.matrix());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < mats.size(); ++s) {
      auto u = detail::find_unit(mats[s]);
      if (!u) continue;
      auto [i, j] = *u;  // row i of F_{lo+s}, column j of F_{lo+s+1}
      mats[s] = detail::eliminate_unit(mats[s], i, j);
      if (s + 1 < mats.size()) mats[s + 1] = mats[s + 1].without(j, static_cast<std::size_t>(-1));
      if (s > 0) mats[s - 1] = mats[s - 1].without(static_cast<std::size_t>(-1), i);
      mods[s] = detail::erase_at(mods[s], i);
      mods[s + 1] = detail::erase_at(mods[s + 1], j);
      changed = true;
    }
  }
  std::vector<GradedMap<F>> maps;
  for (std::size_t s = 0; s < mats.size(); ++s) maps.emplace_back(mods[s + 1], mods[s], std::move(mats[s]));
  return FreeComplex<F>(c.ring(), lo, std::move(mods), std::move(maps)).trimmed();
}

// Hom(C, S(-e)) reindexed on the same range: G_k = F_{lo+hi-k}^vee(-e).
// Differentials are counted from the bottom starting at 0 and the odd-numbered ones are
// negated, so a length-3 complex gets -d_2^vee in the middle.
template <Field F>
FreeComplex<F> dual_twist(const FreeComplex<F>& c, int e) {
  if (c.empty()) return c;
  const int lo = c.min_index(), hi = c.max_index();
  std::vector<Twists> mods;
  for (int k = lo; k <= hi; ++k) {
    Twists t;
    for (int a : c.module(lo + hi - k)) t.push_back(e - a);
    mods.push_back(std::move(t));
  }
  std::vector<GradedMap<F>> maps;
  for (int k = lo + 1; k <= hi; ++k) {
    int j = lo + hi - k + 1;  // G's d_k is the dual of d_j
    GradedMap<F> dm = c.d(j).dual(e);
    if ((j - lo + 1) % 2 != 0) dm = dm.negated();
    maps.push_back(std::move(dm));
  }
  return FreeComplex<F>(c.ring(), lo, std::move(mods), std::move(maps));
}

enum class TruncateSide { at_least, below };

// sigma_{>= r} or sigma_{< r} on the stored index.
template <Field F>
FreeComplex<F> naive_truncate(const FreeComplex<F>& c, int r, TruncateSide side) {
  if (c.empty()) return c;
  if (side == TruncateSide::at_least) return c.slice(r, c.max_index());
  return c.slice(c.min_index(), r - 1);
}

// chi(O_{P^N}(e)) = C(e+N, N) as a polynomial in e.
inline std::int64_t chi_line_bundle(std::int64_t e, int N) { return binomial(e + N, N); }

template <Field F>
std::int64_t euler_characteristic(const FreeComplex<F>& c, std::int64_t m) {
  const int N = c.ring()->projective_dim();
  std::int64_t chi = 0;
  if (c.empty()) return 0;
  for (int k = c.min_index(); k <= c.max_index(); ++k) {
    std::int64_t s = 0;
    for (int a : c.module(k)) s += chi_line_bundle(m - a, N);
    chi += (k % 2 == 0) ? s : -s;
  }
  return chi;
}

}  // namespace pfres

#endif  // PFRES_RESOLUTION_HPP
