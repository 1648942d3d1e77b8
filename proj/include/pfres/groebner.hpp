#ifndef PFRES_GROEBNER_HPP
#define PFRES_GROEBNER_HPP

// Buchberger's algorithm for homogeneous submodules of graded free modules
// sum_j S(-a_j), ideals being the rank-one case.
//
// Inputs are processed degree by degree (sugar = degree for homogeneous
// input). Within a degree, S-pairs are reduced before the new generators, so
// an input generator that survives reduction is part of a minimal generating
// set; this is how minimal generators and minimal syzygies are extracted.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfres/hilbert.hpp"
#include "pfres/polynomial.hpp"

namespace pfres {

// Order on terms m*e_c of a free module. Components in a lower block dominate
// (position over term between blocks); inside a block terms are compared by
// twisted degree, then by the monomial order, then by position.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  ModuleOrder(TermOrder mono_order, std::vector<int> twists, std::vector<int> blocks = {})
      : mono_order_(mono_order), twists_(std::move(twists)), blocks_(std::move(blocks)) {
    if (blocks_.empty()) blocks_.assign(twists_.size(), 0);
    if (blocks_.size() != twists_.size()) throw std::invalid_argument("module order: block list has wrong length");
  }

  // Pure position-over-term: every component is its own block.
  static ModuleOrder position_over_term(TermOrder mono_order, std::vector<int> twists) {
    std::vector<int> blocks(twists.size());
    std::iota(blocks.begin(), blocks.end(), 0);
    return ModuleOrder(mono_order, std::move(twists), std::move(blocks));
  }

  std::size_t rank() const { return twists_.size(); }
  TermOrder mono_order() const { return mono_order_; }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int twist(std::uint32_t c) const { return twists_[c]; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? 1 : -1;
    int da = a.degree() + twists_[ca], db = b.degree() + twists_[cb];
    if (da != db) return da > db ? 1 : -1;
    int c = pfres::compare(a, b, mono_order_);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  TermOrder mono_order_ = TermOrder::degrevlex;
  std::vector<int> twists_;
  std::vector<int> blocks_;
};

template <Field F>
struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  typename F::value_type coeff;
};

// Sparse free-module element, terms strictly decreasing in the module order.
template <Field F>
using ModVec = std::vector<ModTerm<F>>;

namespace detail {

template <Field F>
void sort_and_combine(ModVec<F>& v, const ModuleOrder& ord, const F& k) {
  std::sort(v.begin(), v.end(), [&](const ModTerm<F>& a, const ModTerm<F>& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  ModVec<F> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  v = std::move(out);
}

// f - c*m*g
template <Field F>
ModVec<F> sub_mul(const ModVec<F>& f, const typename F::value_type& c, const Monomial& m, const ModVec<F>& g,
                  const ModuleOrder& ord, const F& k) {
  ModVec<F> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == f.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), g[j].comp, k.neg(k.mul(c, g[j].coeff))});
      ++j;
      have_gm = false;
    } else {
      auto v = k.sub(f[i].coeff, k.mul(c, g[j].coeff));
      if (!k.is_zero(v)) out.push_back({f[i].mono, f[i].comp, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

template <Field F>
void make_monic(ModVec<F>& v, const F& k) {
  if (v.empty() || k.is_one(v.front().coeff)) return;
  auto inv = k.inv(v.front().coeff);
  for (auto& t : v) t.coeff = k.mul(t.coeff, inv);
}

}  // namespace detail

// Twisted degree of a homogeneous element; throws if it is not homogeneous.
template <Field F>
int homogeneous_degree(const ModVec<F>& v, const ModuleOrder& ord) {
  if (v.empty()) throw std::invalid_argument("zero vector has no degree");
  int d = v.front().mono.degree() + ord.twist(v.front().comp);
  for (const auto& t : v)
    if (t.mono.degree() + ord.twist(t.comp) != d) throw std::invalid_argument("inhomogeneous input to Groebner basis");
  return d;
}

template <Field F>
class GroebnerBasis {
 public:
  using value_type = typename F::value_type;

  struct Element {
    ModVec<F> vec;
    std::uint64_t mask;
    int degree;
    const Monomial& lead() const { return vec.front().mono; }
    std::uint32_t comp() const { return vec.front().comp; }
  };

  GroebnerBasis(RingPtr<F> ring, ModuleOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

  const RingPtr<F>& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  std::size_t rank() const { return order_.rank(); }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Element>& elements() const { return elems_; }
  const ModVec<F>& operator[](std::size_t i) const { return elems_[i].vec; }
  // minimal_inputs()[i]: input generator i belongs to the minimal generating set found.
  const std::vector<bool>& minimal_inputs() const { return minimal_inputs_; }

  // Index of an element whose lead divides m*e_comp, or -1.
  long find_reducer(const Monomial& m, std::uint32_t comp) const {
    std::uint64_t mask = m.support_mask();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const auto& e = elems_[i];
      if (e.comp() != comp || (e.mask & ~mask) != 0) continue;
      if (e.lead().divides(m)) return static_cast<long>(i);
    }
    return -1;
  }

  // Reduces f. With full = false only the lead term is reduced repeatedly.
  ModVec<F> reduce(ModVec<F> f, bool full = true) const {
    const F& k = ring_->field();
    ModVec<F> done;
    while (!f.empty()) {
      const auto& t = f.front();
      long r = find_reducer(t.mono, t.comp);
      if (r < 0) {
        if (!full) break;
        done.push_back(std::move(f.front()));
        f.erase(f.begin());
        continue;
      }
      const auto& g = elems_[static_cast<std::size_t>(r)].vec;
      Monomial m = quotient(t.mono, g.front().mono);
      auto c = k.div(t.coeff, g.front().coeff);
      f = detail::sub_mul(f, c, m, g, order_, k);
    }
    if (!full) return f;
    return done;
  }

  bool reduces_to_zero(const ModVec<F>& f) const { return reduce(f, false).empty(); }

  // Lead monomials sorted by component: result[c] generates the lead ideal in component c.
  std::vector<std::vector<Monomial>> lead_ideals() const {
    std::vector<std::vector<Monomial>> out(rank());
    for (const auto& e : elems_) out[e.comp()].push_back(e.lead());
    return out;
  }

  // S-polynomial of elements i and j (same lead component).
  ModVec<F> s_polynomial(std::size_t i, std::size_t j) const {
    return s_poly(elems_[i].vec, elems_[j].vec);
  }

  ModVec<F> s_poly(const ModVec<F>& a, const ModVec<F>& b) const {
    const F& k = ring_->field();
    Monomial l = lcm(a.front().mono, b.front().mono);
    ModVec<F> sa;
    Monomial ma = quotient(l, a.front().mono);
    auto ca = k.inv(a.front().coeff);
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back({t.mono * ma, t.comp, k.mul(t.coeff, ca)});
    return detail::sub_mul(sa, k.inv(b.front().coeff), quotient(l, b.front().mono), b, order_, k);
  }

  // Independent re-check: every S-pair of same-component leads reduces to zero.
  bool verify_s_pairs() const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = i + 1; j < elems_.size(); ++j) {
        if (elems_[i].comp() != elems_[j].comp()) continue;
        if (!reduce(s_polynomial(i, j), false).empty()) return false;
      }
    return true;
  }

  void add_element(ModVec<F> v) {
    Element e{std::move(v), 0, 0};
    e.mask = e.lead().support_mask();
    e.degree = e.lead().degree() + order_.twist(e.comp());
    elems_.push_back(std::move(e));
  }

  void set_minimal_inputs(std::vector<bool> m) { minimal_inputs_ = std::move(m); }

  // Tail-reduce every element and sort by lead term (descending).
  void finalize() {
    const F& k = ring_->field();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      Element e = std::move(elems_[i]);
      elems_.erase(elems_.begin() + static_cast<long>(i));
      ModVec<F> tail(e.vec.begin() + 1, e.vec.end());
      ModVec<F> reduced = reduce(std::move(tail), true);
      ModVec<F> v;
      v.reserve(reduced.size() + 1);
      v.push_back(std::move(e.vec.front()));
      for (auto& t : reduced) v.push_back(std::move(t));
      detail::make_monic(v, k);
      e.vec = std::move(v);
      elems_.insert(elems_.begin() + static_cast<long>(i), std::move(e));
    }
    std::sort(elems_.begin(), elems_.end(), [this](const Element& a, const Element& b) {
      return order_.compare(a.lead(), a.comp(), b.lead(), b.comp()) > 0;
    });
  }

 private:
  RingPtr<F> ring_;
  ModuleOrder order_;
  std::vector<Element> elems_;
  std::vector<bool> minimal_inputs_;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
  std::uint64_t serial;
};

template <Field F>
class BuchbergerRun {
 public:
  BuchbergerRun(GroebnerBasis<F>& gb, bool ideal_case) : gb_(gb), ideal_case_(ideal_case) {}

  void run(std::vector<ModVec<F>> gens) {
    const F& k = gb_.ring()->field();
    const ModuleOrder& ord = gb_.order();
    std::vector<std::pair<int, std::size_t>> inputs;  // (degree, index)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      sort_and_combine(gens[i], ord, k);
      if (!gens[i].empty()) inputs.push_back({homogeneous_degree(gens[i], ord), i});
    }
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<bool> minimal(gens.size(), false);

    std::size_t next_input = 0;
    while (!pairs_.empty() || next_input < inputs.size()) {
      int d = next_input < inputs.size() ? inputs[next_input].first : INT32_MAX;
      for (const auto& p : pairs_) d = std::min(d, p.degree);

      std::vector<CriticalPair> batch;
      std::vector<CriticalPair> rest;
      for (auto& p : pairs_) (p.degree == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) { return a.serial < b.serial; });
      for (const auto& p : batch) {
        ModVec<F> s = gb_.s_polynomial(p.i, p.j);
        ModVec<F> r = gb_.reduce(std::move(s), false);
        if (!r.empty()) insert(std::move(r));
      }
      while (next_input < inputs.size() && inputs[next_input].first == d) {
        std::size_t idx = inputs[next_input].second;
        ModVec<F> r = gb_.reduce(gens[idx], false);
        if (!r.empty()) {
          minimal[idx] = true;
          insert(std::move(r));
        }
        ++next_input;
      }
    }
    gb_.set_minimal_inputs(std::move(minimal));
    gb_.finalize();
  }

 private:
  void insert(ModVec<F> v) {
    make_monic(v, gb_.ring()->field());
    gb_.add_element(std::move(v));
    update(gb_.size() - 1);
  }

  // Gebauer-Moller installation of the pairs of the new element h.
  void update(std::size_t h) {
    const auto& elems = gb_.elements();
    const Monomial& lh = elems[h].lead();
    const std::uint32_t ch = elems[h].comp();
    const ModuleOrder& ord = gb_.order();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (elems[g].comp() != ch) continue;
      c.push_back({g, lcm(lh, elems[g].lead()), ideal_case_ && coprime(lh, elems[g].lead())});
    }
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(std::move(c[a]));
    }
    std::vector<CriticalPair> kept;
    for (auto& p : pairs_) {
      if (elems[p.i].comp() == ch && lh.divides(p.lcm)) {
        Monomial l1 = lcm(elems[p.i].lead(), lh);
        Monomial l2 = lcm(elems[p.j].lead(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& cand : d) {
      if (cand.coprime) continue;
      int deg = cand.lcm.degree() + ord.twist(ch);
      pairs_.push_back({cand.g, h, std::move(cand.lcm), deg, serial_++});
    }
  }

  GroebnerBasis<F>& gb_;
  bool ideal_case_;
  std::vector<CriticalPair> pairs_;
  std::uint64_t serial_ = 0;
};

}  // namespace detail

// Reduced Groebner basis of the submodule generated by gens (homogeneous).
template <Field F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const ModuleOrder& order, std::vector<ModVec<F>> gens) {
  GroebnerBasis<F> gb(ring, order);
  detail::BuchbergerRun<F>(gb, order.rank() == 1).run(std::move(gens));
  return gb;
}

// Conversions between dense columns of polynomials and sparse module vectors.
template <Field F>
ModVec<F> to_modvec(const std::vector<Polynomial<F>>& column, const ModuleOrder& order, const F& k,
                    std::uint32_t offset = 0) {
  ModVec<F> v;
  for (std::uint32_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) v.push_back({t.mono, i + offset, t.coeff});
  detail::sort_and_combine(v, order, k);
  return v;
}

template <Field F>
std::vector<Polynomial<F>> to_column(const ModVec<F>& v, const RingPtr<F>& ring, std::size_t rank,
                                     std::uint32_t offset = 0) {
  std::vector<std::vector<Term<F>>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp - offset >= rank) continue;
    parts[t.comp - offset].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial<F>> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

// Homogeneous ideal with its reduced Groebner basis.
template <Field F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), gb_(ring_, ModuleOrder(ring_->order(), {0})) {
    std::vector<ModVec<F>> vs;
    for (const auto& g : gens_) {
      if (!Polynomial<F>::same_ring(g, Polynomial<F>(ring_))) throw RingMismatch();
      if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator is not homogeneous");
      ModVec<F> v;
      for (const auto& t : g.terms()) v.push_back({t.mono, 0, t.coeff});
      vs.push_back(std::move(v));
    }
    gb_ = buchberger(ring_, ModuleOrder(ring_->order(), {0}), std::move(vs));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  const GroebnerBasis<F>& groebner_basis() const { return gb_; }

  std::vector<Polynomial<F>> basis_polynomials() const {
    std::vector<Polynomial<F>> out;
    for (const auto& e : gb_.elements()) out.push_back(to_column(e.vec, ring_, 1)[0]);
    return out;
  }

  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    ModVec<F> v;
    for (const auto& t : f.terms()) v.push_back({t.mono, 0, t.coeff});
    return to_column(gb_.reduce(std::move(v), true), ring_, 1)[0];
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const auto& g) { return contains(g); });
  }
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  // Minimal generators (a subset of the given generators).
  std::vector<Polynomial<F>> minimal_generators() const {
    std::vector<Polynomial<F>> out;
    const auto& m = gb_.minimal_inputs();
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (i < m.size() && m[i]) out.push_back(gens_[i]);
    return out;
  }

  HilbertSeries hilbert_series() const { return pfres::hilbert_series(gb_.lead_ideals()[0], ring_->nvars()); }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  GroebnerBasis<F> gb_;
};

struct DimensionReport {
  bool empty = false;  // the ideal is the unit ideal
  int krull_dim = 0;   // of S/I; -1 when empty
  int codim = 0;       // (N+1) - krull_dim; nvars+1 when empty
};

template <Field F>
DimensionReport dimension(const Ideal<F>& ideal) {
  DimensionReport r;
  const int n = static_cast<int>(ideal.ring()->nvars());
  int d = ideal.hilbert_series().dimension();
  if (d < 0) {
    r.empty = true;
    r.krull_dim = -1;
    r.codim = n + 1;
  } else {
    r.krull_dim = d;
    r.codim = n - d;
  }
  return r;
}

}  // namespace pfres

#endif  // PFRES_GROEBNER_HPP
