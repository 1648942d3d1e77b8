#ifndef PFRES_COHOMOLOGY_HPP
#define PFRES_COHOMOLOGY_HPP

// Graded Ext into the canonical module, local cohomology by graded local duality
//   dim H^i_m(M)_t = dim Ext^{N+1-i}(M, S(-N-1))_{-t},
// and sheaf cohomology of M~ on P^N read off from it.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfres/resolution.hpp"
#include "pfres/syzygy.hpp"

namespace pfres {

struct Window {
  int tmin = 0;
  int tmax = 0;
};

enum class TableKind { local, sheaf };

// h[i][t - tmin] for tmin <= t <= tmax.
struct CohomologyTable {
  TableKind kind = TableKind::sheaf;
  int N = 0;
  Window window;
  std::vector<std::vector<std::int64_t>> h;

  std::int64_t at(int i, int t) const {
    if (i < 0 || i >= static_cast<int>(h.size()) || t < window.tmin || t > window.tmax) return 0;
    return h[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - window.tmin)];
  }
  int rows() const { return static_cast<int>(h.size()); }
  bool row_zero(int i) const {
    const auto& r = h[static_cast<std::size_t>(i)];
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
  }
};

// Rows printed from the top index down, one column per twist.
inline std::string format_table(const CohomologyTable& tab) {
  std::ostringstream os;
  const char* label = tab.kind == TableKind::sheaf ? "h^" : "H^";
  std::size_t w = 3;
  for (const auto& r : tab.h)
    for (auto v : r) w = std::max(w, std::to_string(v).size() + 1);
  os << std::setw(6) << "t";
  for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) os << std::setw(static_cast<int>(w)) << t;
  os << "\n";
  for (int i = tab.rows() - 1; i >= 0; --i) {
    os << std::setw(6) << (label + std::to_string(i));
    for (int t = tab.window.tmin; t <= tab.window.tmax; ++t) {
      auto v = tab.at(i, t);
      os << std::setw(static_cast<int>(w)) << (v == 0 ? std::string(".") : std::to_string(v));
    }
    os << "\n";
  }
  return os.str();
}

// Default range of twists: a margin of N + 2 around the twists of the resolution.
template <Field F>
Window default_window(const FreeComplex<F>& res) {
  const int N = res.ring()->projective_dim();
  int lo = 0, hi = 0;
  bool any = false;
  for (int k = res.min_index(); k <= res.max_index(); ++k)
    for (int a : res.module(k)) {
      lo = any ? std::min(lo, a) : a;
      hi = any ? std::max(hi, a) : a;
      any = true;
    }
  return {lo - N - 2, hi + N + 2};
}

// Ext^j(M, S(-N-1)) for all j from one minimal resolution of M.
template <Field F>
class ExtCalculator {
 public:
  explicit ExtCalculator(const PresentedModule<F>& m)
      : ring_(m.ring()),
        n_(static_cast<int>(m.ring()->nvars())),
        res_(minimal_free_resolution(m, static_cast<int>(m.ring()->nvars()))) {}

  const FreeComplex<F>& resolution() const { return res_; }

  // Hom(d_{j+1}, S(-n)) : Hom(F_j) -> Hom(F_{j+1}).
  GradedMap<F> coboundary(int j) const { return res_.d(j + 1).dual(n_); }

  PresentedModule<F> ext(int j) const {
    if (j < 0) throw std::invalid_argument("Ext index must be nonnegative");
    if (res_.rank(j) == 0) return PresentedModule<F>::free(ring_, {});
    GradedMap<F> k = syzygies(coboundary(j));
    if (k.cols() == 0) return PresentedModule<F>::free(ring_, {});
    GradedMap<F> rel = syzygies(k);
    Twists src;
    std::vector<std::vector<Polynomial<F>>> cols;
    if (j > 0 && res_.rank(j - 1) > 0) {
      auto x = lift_solve(k, coboundary(j - 1));
      if (!x) throw NotAComplex("image of the coboundary is not inside the kernel", j);
      for (std::size_t c = 0; c < x->cols(); ++c) {
        src.push_back(x->source()[c]);
        cols.push_back(x->matrix().column(c));
      }
    }
    for (std::size_t c = 0; c < rel.cols(); ++c) {
      src.push_back(rel.source()[c]);
      cols.push_back(rel.matrix().column(c));
    }
    GradedMap<F> p(std::move(src), k.source(), PolyMatrix<F>::from_columns(ring_, k.cols(), cols));
    return PresentedModule<F>(prune_presentation(std::move(p)));
  }

 private:
  RingPtr<F> ring_;
  int n_;
  FreeComplex<F> res_;
};

template <Field F>
PresentedModule<F> ext_module(const PresentedModule<F>& m, int j) {
  return ExtCalculator<F>(m).ext(j);
}

namespace detail {

template <Field F>
CohomologyTable local_table(const ExtCalculator<F>& calc, int nvars, Window w) {
  if (w.tmin > w.tmax) throw std::invalid_argument("empty degree window");
  CohomologyTable tab;
  tab.kind = TableKind::local;
  tab.N = nvars - 1;
  tab.window = w;
  const std::size_t width = static_cast<std::size_t>(w.tmax - w.tmin + 1);
  tab.h.assign(static_cast<std::size_t>(nvars + 1), std::vector<std::int64_t>(width, 0));
  for (int j = 0; j <= nvars; ++j) {
    ModuleHilbert<F> hf(calc.ext(j));
    if (hf.is_zero()) continue;
    for (int t = w.tmin; t <= w.tmax; ++t) tab.h[static_cast<std::size_t>(nvars - j)][static_cast<std::size_t>(t - w.tmin)] = hf(-t);
  }
  return tab;
}

}  // namespace detail

// dim H^i_m(M)_t for 0 <= i <= N+1.
template <Field F>
CohomologyTable local_cohomology_dims(const PresentedModule<F>& m, std::optional<Window> window = std::nullopt) {
  ExtCalculator<F> calc(m);
  return detail::local_table(calc, static_cast<int>(m.ring()->nvars()), window.value_or(default_window(calc.resolution())));
}

// h^i(M~(t)) for 0 <= i <= N.
template <Field F>
CohomologyTable sheaf_cohomology_table(const PresentedModule<F>& m, std::optional<Window> window = std::nullopt) {
  ExtCalculator<F> calc(m);
  const int nvars = static_cast<int>(m.ring()->nvars());
  const Window w = window.value_or(default_window(calc.resolution()));
  CohomologyTable loc = detail::local_table(calc, nvars, w);
  ModuleHilbert<F> hf(m);
  CohomologyTable tab;
  tab.kind = TableKind::sheaf;
  tab.N = nvars - 1;
  tab.window = w;
  tab.h.assign(static_cast<std::size_t>(nvars), std::vector<std::int64_t>(loc.h[0].size(), 0));
  for (int t = w.tmin; t <= w.tmax; ++t) {
    const auto c = static_cast<std::size_t>(t - w.tmin);
    tab.h[0][c] = hf(t) - loc.h[0][c] + loc.h[1][c];
    for (int i = 1; i < nvars; ++i) tab.h[static_cast<std::size_t>(i)][c] = loc.h[static_cast<std::size_t>(i + 1)][c];
  }
  return tab;
}

// E = ker(F_i -> F_{i-1}) in the minimal resolution of a finite-length M, presented by d_{i+2}.
template <Field F>
PresentedModule<F> horrocks_bundle(const PresentedModule<F>& m, int i, int N) {
  if (m.ring()->projective_dim() != N)
    throw std::invalid_argument("ring has " + std::to_string(m.ring()->nvars()) + " variables, not N + 1 = " +
                                std::to_string(N + 1));
  if (i <= 0 || i >= N) throw std::invalid_argument("horrocks_bundle needs 0 < i < N");
  if (ModuleHilbert<F>(m).dimension() > 0) throw std::invalid_argument("horrocks_bundle needs a module of finite length");
  auto res = minimal_free_resolution(m, N + 1);
  return PresentedModule<F>(res.d(i + 2));
}

struct DualityViolation {
  int i = 0;
  int t = 0;
  std::int64_t lhs = 0;  // h^i(F_2-side(t))
  std::int64_t rhs = 0;  // h^{N-i}(F_1-side(l - t))
};

struct DualityReport {
  int N = 0;
  int l = 0;
  Window window;
  CohomologyTable f2_table;
  CohomologyTable f1_table;
  std::vector<DualityViolation> violations;
  bool holds() const { return violations.empty(); }
};

// h^i(A(t)) = h^{N-i}(B(l-t)) for every row i and every t in the window; B's table is taken over
// the reflected window so both sides are known.
template <Field F>
DualityReport duality_check(const PresentedModule<F>& f2_side, const PresentedModule<F>& f1_side, int l, Window w) {
  DualityReport r;
  r.N = f2_side.ring()->projective_dim();
  r.l = l;
  r.window = w;
  r.f2_table = sheaf_cohomology_table(f2_side, w);
  r.f1_table = sheaf_cohomology_table(f1_side, Window{l - w.tmax, l - w.tmin});
  for (int i = 0; i <= r.N; ++i)
    for (int t = w.tmin; t <= w.tmax; ++t) {
      auto a = r.f2_table.at(i, t), b = r.f1_table.at(r.N - i, l - t);
      if (a != b) r.violations.push_back({i, t, a, b});
    }
  return r;
}

// The two middle modules of 0 -> S(-L) -> F_2 -> F_1 -> S.
template <Field F>
DualityReport duality_check(const FreeComplex<F>& c, int l, std::optional<Window> window = std::nullopt) {
  if (c.min_index() != 0 || c.max_index() != 3 || c.rank(0) != 1 || c.rank(3) != 1)
    throw std::invalid_argument("duality_check needs a complex 0 -> S(-L) -> F_2 -> F_1 -> S");
  const RingPtr<F>& ring = c.ring();
  return duality_check(PresentedModule<F>::free(ring, c.module(2)), PresentedModule<F>::free(ring, c.module(1)), l,
                       window.value_or(default_window(c)));
}

struct ABReport {
  int pd = 0;
  int depth = 0;
  int nvars = 0;
  bool holds() const { return pd == nvars - depth; }
};

// pd M from the minimal resolution against depth M = min{i : H^i_m(M) != 0}.
template <Field F>
ABReport ab_bounds_check(const PresentedModule<F>& m) {
  if (ModuleHilbert<F>(m).is_zero()) throw std::invalid_argument("ab_bounds_check: the module is zero");
  ExtCalculator<F> calc(m);
  ABReport r;
  r.nvars = static_cast<int>(m.ring()->nvars());
  r.pd = calc.resolution().trimmed().max_index();
  int top = -1;
  for (int j = 0; j <= r.nvars; ++j)
    if (!ModuleHilbert<F>(calc.ext(j)).is_zero()) top = j;
  r.depth = r.nvars - top;
  return r;
}

}  // namespace pfres

#endif  // PFRES_COHOMOLOGY_HPP
