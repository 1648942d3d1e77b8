#ifndef PFRES_CHARTWO_HPP
#define PFRES_CHARTWO_HPP

// Frobenius, the tensor square of a free module split into D_2, Lambda^2, S_2,
// and Lambda^2 of a complex
//
//   H^i = sum_{q < i/2} G^q (x) G^{i-q}  +  Lambda^2 G^{i/2}  (i = 0 mod 4)
//                                        +  S_2 G^{i/2}       (i = 2 mod 4)
//
// realized as the (-1)-eigenspace of T(a (x) b) = (-1)^{|a||b|} b (x) a on G (x) G.
// Cohomological complexes G^0 -> G^1 -> ... are stored with negated indices: G^q = F_{-q}.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pfres/cohomology.hpp"
#include "pfres/exactness.hpp"
#include "pfres/resolution.hpp"
#include "pfres/syzygy.hpp"

namespace pfres {

namespace detail {

template <Field F>
void require_char2(const RingPtr<F>& ring, const char* what) {
  if (ring->characteristic() != 2) throw std::invalid_argument(std::string(what) + " needs characteristic 2");
}

template <Field F>
void require_not_char2(const RingPtr<F>& ring, const char* what) {
  if (ring->characteristic() == 2) throw std::invalid_argument(std::string(what) + " needs characteristic other than 2");
}

template <Field F>
PolyMatrix<F> constant_matrix(const RingPtr<F>& ring, const std::vector<std::vector<int>>& m, std::size_t rows,
                              std::size_t cols) {
  PolyMatrix<F> out(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) out(i, j) = Polynomial<F>::constant(ring, m[i][j]);
  return out;
}

}  // namespace detail

// F(M) = (m_ij^2) with all twists doubled.
template <Field F>
GradedMap<F> frobenius(const GradedMap<F>& m) {
  detail::require_char2(m.ring(), "frobenius");
  Twists s, t;
  for (int a : m.source()) s.push_back(2 * a);
  for (int b : m.target()) t.push_back(2 * b);
  return GradedMap<F>(std::move(s), std::move(t), m.matrix().map([](const Polynomial<F>& p) { return p * p; }));
}

template <Field F>
FreeComplex<F> frobenius(const FreeComplex<F>& c) {
  detail::require_char2(c.ring(), "frobenius");
  std::vector<Twists> mods;
  for (const auto& m : c.modules()) {
    Twists t;
    for (int a : m) t.push_back(2 * a);
    mods.push_back(std::move(t));
  }
  std::vector<GradedMap<F>> maps;
  for (const auto& d : c.maps()) maps.push_back(frobenius(d));
  return FreeComplex<F>(c.ring(), c.min_index(), std::move(mods), std::move(maps));
}

// V (x) V on the basis e_i (x) e_j (row-major), t = 1 - tau, and the pieces
//   D_2 = ker t (basis e_i e_j + e_j e_i for i < j, e_i (x) e_i),
//   Lambda^2 = im t (basis e_i (x) e_j - e_j (x) e_i, i < j),
//   S_2 = coker t (basis the classes of e_i (x) e_j, i <= j),
// and in characteristic 2 also F(V) = D_2 / Lambda^2 with 0 -> F(V) -> S_2 V -> Lambda^2 V -> 0.
template <Field F>
struct TensorSquare {
  Twists v, tensor, lambda2, d2, s2;
  GradedMap<F> t;              // V (x) V -> V (x) V
  GradedMap<F> lambda2_in;     // Lambda^2 -> V (x) V
  GradedMap<F> d2_in;          // D_2 -> V (x) V
  GradedMap<F> s2_out;         // V (x) V -> S_2
  bool char2 = false;
  // characteristic 2 only
  std::optional<GradedMap<F>> s2_to_lambda2;  // the map induced by t on coker t
  std::optional<Twists> frob;                 // twists of F(V)
  std::optional<GradedMap<F>> frob_to_s2;     // e_i -> e_i^2
  std::optional<GradedMap<F>> d2_to_frob;     // D_2 -> D_2 / Lambda^2
};

template <Field F>
TensorSquare<F> tensor_square_decomposition(const RingPtr<F>& ring, const Twists& v) {
  const std::size_t r = v.size();
  const auto none = GradedMap<F>::zero(ring, {}, {});
  TensorSquare<F> ts{v, {}, {}, {}, {}, none, none, none, none, ring->characteristic() == 2, {}, {}, {}, {}};
  auto tidx = [r](std::size_t i, std::size_t j) { return i * r + j; };
  std::vector<std::pair<std::size_t, std::size_t>> lam, sym;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      sym.emplace_back(i, j);
      if (i < j) lam.emplace_back(i, j);
    }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lam_pos, sym_pos;
  for (std::size_t k = 0; k < lam.size(); ++k) lam_pos[lam[k]] = k;
  for (std::size_t k = 0; k < sym.size(); ++k) sym_pos[sym[k]] = k;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) ts.tensor.push_back(v[i] + v[j]);
  for (auto [i, j] : lam) ts.lambda2.push_back(v[i] + v[j]);
  for (auto [i, j] : sym) {
    ts.d2.push_back(v[i] + v[j]);
    ts.s2.push_back(v[i] + v[j]);
  }
  const std::size_t n = r * r;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0)), li(n, std::vector<int>(lam.size(), 0)),
      di(n, std::vector<int>(sym.size(), 0)), so(sym.size(), std::vector<int>(n, 0)),
      sl(lam.size(), std::vector<int>(sym.size(), 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      t[tidx(i, j)][tidx(i, j)] += 1;
      t[tidx(j, i)][tidx(i, j)] -= 1;
      so[sym_pos[{std::min(i, j), std::max(i, j)}]][tidx(i, j)] = 1;
    }
  for (std::size_t k = 0; k < lam.size(); ++k) {
    auto [i, j] = lam[k];
    li[tidx(i, j)][k] = 1;
    li[tidx(j, i)][k] = -1;
  }
  for (std::size_t k = 0; k < sym.size(); ++k) {
    auto [i, j] = sym[k];
    di[tidx(i, j)][k] = 1;
    if (i != j) di[tidx(j, i)][k] = 1;
    // t(e_i (x) e_j) = e_i (x) e_j + e_j (x) e_i in characteristic 2
    if (i != j) sl[lam_pos[{i, j}]][k] = 1;
  }
  ts.t = GradedMap<F>(ts.tensor, ts.tensor, detail::constant_matrix(ring, t, n, n));
  ts.lambda2_in = GradedMap<F>(ts.lambda2, ts.tensor, detail::constant_matrix(ring, li, n, lam.size()));
  ts.d2_in = GradedMap<F>(ts.d2, ts.tensor, detail::constant_matrix(ring, di, n, sym.size()));
  ts.s2_out = GradedMap<F>(ts.tensor, ts.s2, detail::constant_matrix(ring, so, sym.size(), n));
  if (ts.char2) {
    ts.s2_to_lambda2 = GradedMap<F>(ts.s2, ts.lambda2, detail::constant_matrix(ring, sl, lam.size(), sym.size()));
    Twists fr;
    for (int a : v) fr.push_back(2 * a);
    std::vector<std::vector<int>> fs(sym.size(), std::vector<int>(r, 0)), df(r, std::vector<int>(sym.size(), 0));
    for (std::size_t i = 0; i < r; ++i) {
      fs[sym_pos[{i, i}]][i] = 1;
      df[i][sym_pos[{i, i}]] = 1;
    }
    ts.frob = fr;
    ts.frob_to_s2 = GradedMap<F>(fr, ts.s2, detail::constant_matrix(ring, fs, sym.size(), r));
    ts.d2_to_frob = GradedMap<F>(ts.d2, fr, detail::constant_matrix(ring, df, r, sym.size()));
  }
  return ts;
}

// Empty when every composition and rank identity of the decomposition holds.
template <Field F>
std::vector<std::string> tensor_square_defects(const TensorSquare<F>& ts) {
  std::vector<std::string> out;
  const std::size_t r = ts.v.size();
  const std::size_t lam = r ? r * (r - 1) / 2 : 0, sym = r * (r + 1) / 2;
  if (ts.lambda2.size() != lam) out.push_back("rank of Lambda^2 is not r(r-1)/2");
  if (ts.s2.size() != sym || ts.d2.size() != sym) out.push_back("rank of S_2 or D_2 is not r(r+1)/2");
  if (!ts.t.compose(ts.d2_in).is_zero()) out.push_back("t does not vanish on D_2");
  if (!ts.s2_out.compose(ts.t).is_zero()) out.push_back("S_2 projection does not vanish on im t");
  if (rank(ts.t.matrix()) != lam) out.push_back("rank of t differs from rank of Lambda^2");
  if (rank(ts.lambda2_in.matrix()) != lam) out.push_back("Lambda^2 -> V (x) V is not injective");
  if (rank(ts.d2_in.matrix()) != sym) out.push_back("D_2 -> V (x) V is not injective");
  const std::size_t d2_to_s2 = rank(ts.s2_out.compose(ts.d2_in).matrix());
  if (ts.char2) {
    // t factors as V (x) V -> S_2 -> Lambda^2 -> V (x) V
    const auto& sl = *ts.s2_to_lambda2;
    if (!(ts.lambda2_in.compose(sl).compose(ts.s2_out) == ts.t))
      out.push_back("t does not factor through S_2 and Lambda^2");
    if (d2_to_s2 != r) out.push_back("D_2 -> S_2 does not have rank r in characteristic 2");
    // Lambda^2 inside D_2: every element of im t is symmetric
    if (!ts.t.compose(ts.lambda2_in).is_zero()) out.push_back("Lambda^2 is not contained in D_2");
    const auto& fs = *ts.frob_to_s2;
    if (!sl.compose(fs).is_zero()) out.push_back("S_2 -> Lambda^2 does not vanish on F(V)");
    if (rank(fs.matrix()) != r) out.push_back("F(V) -> S_2 is not injective");
    if (rank(sl.matrix()) != lam) out.push_back("S_2 -> Lambda^2 is not surjective");
    if (sym != r + lam) out.push_back("rank S_2 != rank F(V) + rank Lambda^2");
    // D_2 / Lambda^2 = F(V): the quotient map has rank r and kills Lambda^2 (= im t, written in the D_2 basis)
    if (rank(ts.d2_to_frob->matrix()) != r) out.push_back("D_2 -> F(V) does not have rank r");
    auto in_d2 = lift_solve(ts.d2_in, ts.lambda2_in);
    if (!in_d2 || !ts.d2_to_frob->compose(*in_d2).is_zero()) out.push_back("D_2 -> F(V) does not vanish on Lambda^2");
  } else {
    if (d2_to_s2 != sym) out.push_back("D_2 -> S_2 is not an isomorphism");
    if (d2_to_s2 + lam != r * r) out.push_back("V (x) V is not S_2 + Lambda^2");
  }
  return out;
}

enum class BlockKind { tensor, lambda2, sym2 };

struct Lambda2Block {
  int degree = 0;  // cohomological degree i of H^i
  int p = 0, q = 0;
  BlockKind kind = BlockKind::tensor;
  std::size_t offset = 0, size = 0;
};

template <Field F>
struct TensorSquareComplex {
  FreeComplex<F> source;
  FreeComplex<F> complex;  // H^i stored at index -i
  std::vector<Lambda2Block> blocks;
  int min_degree = 0, max_degree = 0;  // cohomological range of H
};

template <Field F>
TensorSquareComplex<F> lambda2_complex(const FreeComplex<F>& g) {
  const RingPtr<F>& ring = g.ring();
  detail::require_not_char2(ring, "lambda2_complex");
  if (g.empty()) return {g, g, {}, 0, 0};
  const int plo = -g.max_index(), phi = -g.min_index();
  auto gtw = [&](int p) -> const Twists& { return g.module(-p); };
  auto gd = [&](int p) { return g.d(-p).matrix(); };  // G^p -> G^{p+1}

  // basis element: e_{p,a} (x) e_{q,b} - (-1)^{pq} e_{q,b} (x) e_{p,a}, or e_{p,a} (x) e_{p,a} alone
  struct Elt {
    int p;
    std::size_t a;
    int q;
    std::size_t b;
    bool single;
  };
  using Key = std::tuple<int, std::size_t, int, std::size_t>;
  const int ilo = 2 * plo, ihi = 2 * phi;
  std::vector<std::vector<Elt>> basis(static_cast<std::size_t>(ihi - ilo + 1));
  std::vector<std::map<Key, std::size_t>> lead(basis.size());
  std::vector<Lambda2Block> blocks;
  for (int i = ilo; i <= ihi; ++i) {
    auto& bs = basis[static_cast<std::size_t>(i - ilo)];
    for (int p = plo; 2 * p < i; ++p) {
      const int q = i - p;
      if (q > phi) continue;
      Lambda2Block blk{i, p, q, BlockKind::tensor, bs.size(), 0};
      for (std::size_t a = 0; a < gtw(p).size(); ++a)
        for (std::size_t b = 0; b < gtw(q).size(); ++b) bs.push_back({p, a, q, b, false});
      blk.size = bs.size() - blk.offset;
      blocks.push_back(blk);
    }
    if (i % 2 == 0) {
      const int p = i / 2;
      const bool sym = (p % 2 + 2) % 2 == 1;  // i = 2 mod 4
      Lambda2Block blk{i, p, p, sym ? BlockKind::sym2 : BlockKind::lambda2, bs.size(), 0};
      const std::size_t n = gtw(p).size();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          if (a == b && !sym) continue;
          bs.push_back({p, a, p, b, a == b});
        }
      blk.size = bs.size() - blk.offset;
      blocks.push_back(blk);
    }
    auto& ld = lead[static_cast<std::size_t>(i - ilo)];
    for (std::size_t k = 0; k < bs.size(); ++k) ld[{bs[k].p, bs[k].a, bs[k].q, bs[k].b}] = k;
  }

  auto twist_of = [&](const Elt& e) { return gtw(e.p)[e.a] + gtw(e.q)[e.b]; };
  std::vector<Twists> mods;  // stored from index -ihi up to -ilo
  for (int i = ihi; i >= ilo; --i) {
    Twists t;
    for (const auto& e : basis[static_cast<std::size_t>(i - ilo)]) t.push_back(twist_of(e));
    mods.push_back(std::move(t));
  }
  std::vector<GradedMap<F>> maps;  // d_{m}, m from -ihi + 1 up to -ilo: H^{-m} -> H^{-m+1}
  for (int i = ihi - 1; i >= ilo; --i) {
    const auto& src = basis[static_cast<std::size_t>(i - ilo)];
    const auto& tgt_lead = lead[static_cast<std::size_t>(i + 1 - ilo)];
    PolyMatrix<F> m(ring, basis[static_cast<std::size_t>(i + 1 - ilo)].size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Elt& e = src[c];
      std::vector<std::pair<Polynomial<F>, Key>> terms;
      terms.push_back({Polynomial<F>::constant(ring, 1), Key{e.p, e.a, e.q, e.b}});
      if (!e.single) {
        const bool plus = ((e.p * e.q) % 2 + 2) % 2 == 1;
        terms.push_back({Polynomial<F>::constant(ring, plus ? 1 : -1), Key{e.q, e.b, e.p, e.a}});
      }
      std::map<Key, Polynomial<F>> image;
      auto add = [&](const Key& key, const Polynomial<F>& v) {
        auto it = tgt_lead.find(key);
        if (it == tgt_lead.end()) return;  // determined by the T-symmetry
        auto [pos, inserted] = image.try_emplace(key, v);
        if (!inserted) pos->second += v;
      };
      for (const auto& [c0, key] : terms) {
        auto [p, a, q, b] = key;
        if (p + 1 <= phi) {
          const auto dp = gd(p);
          for (std::size_t a2 = 0; a2 < dp.rows(); ++a2)
            if (!dp(a2, a).is_zero()) add(Key{p + 1, a2, q, b}, c0 * dp(a2, a));
        }
        if (q + 1 <= phi) {
          const auto dq = gd(q);
          for (std::size_t b2 = 0; b2 < dq.rows(); ++b2)
            if (!dq(b2, b).is_zero()) add(Key{p, a, q + 1, b2}, (p % 2 == 0 ? c0 : -c0) * dq(b2, b));
        }
      }
      for (auto& [key, v] : image) m(tgt_lead.at(key), c) = v;
    }
    maps.emplace_back(mods[static_cast<std::size_t>(ihi - i)], mods[static_cast<std::size_t>(ihi - i - 1)], std::move(m));
  }
  return {g, FreeComplex<F>(ring, -ihi, std::move(mods), std::move(maps)), std::move(blocks), ilo, ihi};
}

// Exactness of a cohomological complex H^lo -> ... -> H^hi (stored negated) at every degree
// except the lowest: the complex is reversed into homological order and spliced with a free
// resolution of ker(H^lo -> H^lo+1), then certified.
template <Field F>
BECertificate certify_except_lowest(const FreeComplex<F>& h, ExactnessMode mode) {
  const RingPtr<F>& ring = h.ring();
  const int top = h.max_index();  // lowest cohomological degree
  std::vector<GradedMap<F>> maps;
  for (int m = h.min_index() + 1; m <= top; ++m) maps.push_back(h.d(m));
  if (h.min_index() == top) throw std::invalid_argument("certify_except_lowest needs at least two terms");
  // ker of the first differential, then its syzygies
  GradedMap<F> cur = syzygies(h.d(top));
  for (int s = 0; s <= static_cast<int>(ring->nvars()) && cur.cols() > 0; ++s) {
    maps.push_back(cur);
    cur = syzygies(cur);
  }
  return be_exactness_certificate(FreeComplex<F>::from_maps(ring, 0, std::move(maps)), mode);
}

// Lambda^2 P^0 -> P^0 (x) P^1 -> S_2 P^1 for a map delta : P^0 -> P^1, in any characteristic.
template <Field F>
FreeComplex<F> lambda2_of_map(const GradedMap<F>& delta) {
  const RingPtr<F>& ring = delta.ring();
  const Twists& p0 = delta.source();
  const Twists& p1 = delta.target();
  const std::size_t n0 = p0.size(), n1 = p1.size();
  Twists lam, mid, sym;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> sym_pos;
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = a + 1; b < n0; ++b) lam.push_back(p0[a] + p0[b]);
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n1; ++b) mid.push_back(p0[a] + p1[b]);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = a; b < n1; ++b) {
      sym_pos[{a, b}] = sym.size();
      sym.push_back(p1[a] + p1[b]);
    }
  // e_a ^ e_b -> e_a (x) delta(e_b) - e_b (x) delta(e_a)
  PolyMatrix<F> d0(ring, mid.size(), lam.size());
  std::size_t col = 0;
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = a + 1; b < n0; ++b, ++col)
      for (std::size_t c = 0; c < n1; ++c) {
        d0(a * n1 + c, col) += delta(c, b);
        d0(b * n1 + c, col) -= delta(c, a);
      }
  // e_a (x) f_c -> delta(e_a) f_c
  PolyMatrix<F> d1(ring, sym.size(), mid.size());
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t c = 0; c < n1; ++c)
      for (std::size_t c2 = 0; c2 < n1; ++c2)
        if (!delta(c2, a).is_zero()) d1(sym_pos[{std::min(c, c2), std::max(c, c2)}], a * n1 + c) += delta(c2, a);
  return FreeComplex<F>(ring, -2, {sym, mid, lam}, {GradedMap<F>(mid, sym, d1), GradedMap<F>(lam, mid, d0)});
}

// S_2(M) or Lambda^2(M) of M = coker(delta : A -> B), presented by A (x) B -> T_2(B).
template <Field F>
PresentedModule<F> second_power(const PresentedModule<F>& m, bool symmetric) {
  const RingPtr<F>& ring = m.ring();
  const auto& delta = m.presentation();
  const Twists& a = delta.source();
  const Twists& b = delta.target();
  const std::size_t n = b.size();
  Twists t2;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !symmetric) continue;
      pos[{i, j}] = t2.size();
      t2.push_back(b[i] + b[j]);
    }
  Twists src;
  std::vector<std::vector<Polynomial<F>>> cols;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<Polynomial<F>> col(t2.size(), Polynomial<F>(ring));
      for (std::size_t c = 0; c < n; ++c) {
        const auto& e = delta(c, x);
        if (e.is_zero() || (!symmetric && c == f)) continue;
        const std::size_t lo = std::min(c, f), hi = std::max(c, f);
        // e_c e_f, with e_f ^ e_c = -e_c ^ e_f in the exterior square
        if (!symmetric && c > f) col[pos[{lo, hi}]] -= e;
        else col[pos[{lo, hi}]] += e;
      }
      src.push_back(a[x] + b[f]);
      cols.push_back(std::move(col));
    }
  return PresentedModule<F>(GradedMap<F>(std::move(src), t2, PolyMatrix<F>::from_columns(ring, t2.size(), cols)));
}

struct MaxCohomReport {
  int N = 0;
  int r = 0;
  bool symmetric = true;  // compared with S_2(H^r) (else Lambda^2(H^r))
  Window window;
  std::vector<std::int64_t> row_2r;    // h^{2r}(Lambda^2 E (t))
  std::vector<std::int64_t> expected;  // dim T_2(H^r_*(E))_t
  std::vector<int> nonzero_above;      // rows i with 2r < i < N that are not zero
  bool holds() const { return row_2r == expected && nonzero_above.empty(); }
};

// E = horrocks_bundle(m, r, N). Compares the cohomology of Lambda^2 E with T_2 of H^r_*(E) = m:
// S_2 when r is odd or the characteristic is 2, Lambda^2 when r is even.
template <Field F>
MaxCohomReport char2_max_cohom_check(const PresentedModule<F>& m, int r, std::optional<Window> window = std::nullopt) {
  const RingPtr<F>& ring = m.ring();
  const int N = ring->projective_dim();
  const bool char2 = ring->characteristic() == 2;
  if (r <= 0 || 2 * r >= N) throw std::invalid_argument("max cohomology check needs 0 < r < N/2");
  if (char2 && r != 1) throw std::invalid_argument("in characteristic 2 only r = 1 is implemented");
  if (ModuleHilbert<F>(m).dimension() > 0) throw std::invalid_argument("H^r must be a module of finite length");
  MaxCohomReport rep;
  rep.N = N;
  rep.r = r;
  rep.symmetric = char2 || r % 2 == 1;
  auto res = minimal_free_resolution(m, N + 1);
  rep.window = window.value_or(default_window(res));
  const Window w = rep.window;
  const std::size_t width = static_cast<std::size_t>(w.tmax - w.tmin + 1);
  rep.row_2r.assign(width, 0);
  rep.expected.assign(width, 0);
  ModuleHilbert<F> t2(second_power(m, rep.symmetric));
  for (int t = w.tmin; t <= w.tmax; ++t) rep.expected[static_cast<std::size_t>(t - w.tmin)] = t2(t);
  if (res.rank(0) == 0) return rep;
  // P^j = F_{r-j}: the resolution of m cut at F_r, with G^q stored at index -q
  std::vector<Twists> mods;
  std::vector<GradedMap<F>> maps;
  for (int k = 0; k <= r; ++k) mods.push_back(res.module(k));
  for (int k = 1; k <= r; ++k) maps.push_back(res.d(k));
  FreeComplex<F> p(ring, -r, std::move(mods), std::move(maps));
  FreeComplex<F> lam = char2 ? lambda2_of_map(p.d(0)) : lambda2_complex(p).complex;
  // Lambda^2 E~ is the sheaf of ker(H^0 -> H^1)
  GradedMap<F> first = lam.d(0);
  GradedMap<F> kernel = syzygies(first);
  PresentedModule<F> l2(syzygies(kernel));
  auto tab = sheaf_cohomology_table(l2, w);
  for (int t = w.tmin; t <= w.tmax; ++t) rep.row_2r[static_cast<std::size_t>(t - w.tmin)] = tab.at(2 * r, t);
  for (int i = 2 * r + 1; i < N; ++i)
    if (!tab.row_zero(i)) rep.nonzero_above.push_back(i);
  return rep;
}

}  // namespace pfres

#endif  // PFRES_CHARTWO_HPP
