#ifndef PFRES_SYZYGY_HPP
#define PFRES_SYZYGY_HPP

// Kernels, lifts and Hilbert functions of graded maps, all read off one
// Groebner basis of the graph {(A v, v)} inside F_0 + F_1 under an order
// where the F_0 block dominates.

#include <optional>
#include <utility>
#include <vector>

#include "pfres/graded.hpp"
#include "pfres/groebner.hpp"

namespace pfres {

template <Field F>
class MapGB {
 public:
  explicit MapGB(const GradedMap<F>& a) : a_(a), gb_(a.ring(), graph_order(a)) {
    const auto m = static_cast<std::uint32_t>(a.rows());
    const F& k = a.ring()->field();
    std::vector<ModVec<F>> gens;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      ModVec<F> v = to_modvec(a.matrix().column(j), gb_.order(), k);
      v.push_back({Monomial(a.ring()->nvars()), m + static_cast<std::uint32_t>(j), k.one()});
      gens.push_back(std::move(v));
    }
    gb_ = buchberger(a.ring(), graph_order(a), std::move(gens));
  }

  const GradedMap<F>& map() const { return a_; }
  const GroebnerBasis<F>& basis() const { return gb_; }

  // Minimal generators of ker A, as the columns of a map into the source of A.
  GradedMap<F> kernel() const {
    const auto m = static_cast<std::uint32_t>(a_.rows());
    const std::size_t n = a_.cols();
    const RingPtr<F>& ring = a_.ring();
    std::vector<ModVec<F>> syz;
    ModuleOrder src_order(ring->order(), a_.source());
    for (const auto& e : gb_.elements()) {
      if (e.comp() < m) continue;
      ModVec<F> v;
      for (const auto& t : e.vec) v.push_back({t.mono, t.comp - m, t.coeff});
      syz.push_back(std::move(v));
    }
    // second pass keeps a minimal generating subset
    GroebnerBasis<F> g2 = buchberger(ring, src_order, syz);
    std::vector<std::vector<Polynomial<F>>> cols;
    Twists twists;
    const auto& keep = g2.minimal_inputs();
    for (std::size_t i = 0; i < syz.size(); ++i) {
      if (!keep[i]) continue;
      twists.push_back(homogeneous_degree(syz[i], src_order));
      cols.push_back(to_column(syz[i], ring, n));
    }
    return GradedMap<F>(std::move(twists), a_.source(), PolyMatrix<F>::from_columns(ring, n, cols));
  }

  // X with A X = b for a single homogeneous column b of degree deg; none if b is not in the image.
  std::optional<std::vector<Polynomial<F>>> solve(const std::vector<Polynomial<F>>& b) const {
    const RingPtr<F>& ring = a_.ring();
    ModVec<F> v = to_modvec(b, gb_.order(), ring->field());
    ModVec<F> r = gb_.reduce(std::move(v), true);
    const auto m = static_cast<std::uint32_t>(a_.rows());
    for (const auto& t : r)
      if (t.comp < m) return std::nullopt;
    auto x = to_column(r, ring, a_.cols(), m);
    for (auto& p : x) p = -p;
    return x;
  }

  bool in_image(const std::vector<Polynomial<F>>& b) const {
    ModVec<F> v = to_modvec(b, gb_.order(), a_.ring()->field());
    ModVec<F> r = gb_.reduce(std::move(v), true);
    const auto m = static_cast<std::uint32_t>(a_.rows());
    for (const auto& t : r)
      if (t.comp < m) return false;
    return true;
  }

 private:
  static ModuleOrder graph_order(const GradedMap<F>& a) {
    Twists tw = a.target();
    tw.insert(tw.end(), a.source().begin(), a.source().end());
    std::vector<int> blocks(tw.size(), 0);
    for (std::size_t j = a.rows(); j < tw.size(); ++j) blocks[j] = 1;
    return ModuleOrder(a.ring()->order(), std::move(tw), std::move(blocks));
  }

  GradedMap<F> a_;
  GroebnerBasis<F> gb_;
};

template <Field F>
GradedMap<F> syzygies(const GradedMap<F>& a) {
  return MapGB<F>(a).kernel();
}

// X : H -> F with A X = B, or none if some column of B is outside im A.
template <Field F>
std::optional<GradedMap<F>> lift_solve(const GradedMap<F>& a, const GradedMap<F>& b) {
  if (a.target() != b.target()) throw DegreeError("lift_solve: maps have different targets");
  MapGB<F> g(a);
  std::vector<std::vector<Polynomial<F>>> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto x = g.solve(b.matrix().column(j));
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return GradedMap<F>(b.source(), a.source(), PolyMatrix<F>::from_columns(a.ring(), a.cols(), cols));
}

// Groebner basis of the column span of a map inside its target.
template <Field F>
GroebnerBasis<F> image_basis(const GradedMap<F>& a) {
  ModuleOrder ord(a.ring()->order(), a.target());
  std::vector<ModVec<F>> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) gens.push_back(to_modvec(a.matrix().column(j), ord, a.ring()->field()));
  return buchberger(a.ring(), ord, std::move(gens));
}

// Columns of a that form a minimal generating set of its image.
template <Field F>
GradedMap<F> minimal_image_generators(const GradedMap<F>& a) {
  GroebnerBasis<F> gb = image_basis(a);
  const auto& keep = gb.minimal_inputs();
  std::vector<std::vector<Polynomial<F>>> cols;
  Twists tw;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (keep[j]) {
      cols.push_back(a.matrix().column(j));
      tw.push_back(a.source()[j]);
    }
  return GradedMap<F>(std::move(tw), a.target(), PolyMatrix<F>::from_columns(a.ring(), a.rows(), cols));
}

// Hilbert function of coker(P), from the lead terms of a GB of im P.
template <Field F>
class ModuleHilbert {
 public:
  explicit ModuleHilbert(const PresentedModule<F>& m) : nvars_(static_cast<int>(m.ring()->nvars())) {
    GroebnerBasis<F> gb = image_basis(m.presentation());
    auto leads = gb.lead_ideals();
    twists_ = m.generators();
    for (std::size_t c = 0; c < twists_.size(); ++c) series_.push_back(hilbert_series(leads[c], m.ring()->nvars()));
  }

  std::int64_t operator()(std::int64_t t) const {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < twists_.size(); ++c) s += series_[c].value(t - twists_[c]);
    return s;
  }

  // Krull dimension of the module; -1 for the zero module.
  int dimension() const {
    int d = -1;
    for (const auto& s : series_) d = std::max(d, s.dimension());
    return d;
  }
  bool is_zero() const { return dimension() < 0; }
  int nvars() const { return nvars_; }

 private:
  int nvars_;
  Twists twists_;
  std::vector<HilbertSeries> series_;
};

}  // namespace pfres

#endif  // PFRES_SYZYGY_HPP
