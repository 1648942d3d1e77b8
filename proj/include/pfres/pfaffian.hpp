#ifndef PFRES_PFAFFIAN_HPP
#define PFRES_PFAFFIAN_HPP

// Pfaffians, sub-Pfaffians and the self-dual resolution
//
//   0 -> S(-t-2s) --g--> E^vee(-t-s) --f--> E(-s) --g^T--> S
//
// of the ideal of 2p x 2p Pfaffians of a (2p+1) x (2p+1) skew matrix f.
// E = sum_j O(a_j) is given by its twists a_j, and s = sum_j a_j + p t, so
// F_1 = sum_j S(-(s - a_j)), F_2 = sum_j S(-(t + s + a_j)) and f_ij has degree t + a_i + a_j.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfres/exactness.hpp"
#include "pfres/random.hpp"
#include "pfres/resolution.hpp"

namespace pfres {

class SkewError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Empty when a is skew with zero diagonal, else a description of the first defect.
template <Field F>
std::optional<std::string> skew_defect(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) return "matrix is not square";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) return "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is nonzero";
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) + a(j, i)).is_zero())
        return "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(j) + "," +
               std::to_string(i) + ") are not negatives";
  }
  return std::nullopt;
}

namespace detail {

template <Field F>
class PfaffianExpander {
 public:
  explicit PfaffianExpander(const PolyMatrix<F>& a) : a_(a) {
    if (a.rows() > 62) throw std::invalid_argument("matrix too large for Pfaffian expansion");
  }

  // pf of the principal submatrix on the set bits of mask
  Polynomial<F> pf(std::uint64_t mask) {
    if (mask == 0) return Polynomial<F>::constant(a_.ring(), 1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (mask >> i & 1) idx.push_back(i);
    Polynomial<F> sum(a_.ring());
    const std::uint64_t first = std::uint64_t{1} << idx[0];
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
      const auto& e = a_(idx[0], idx[pos]);
      if (e.is_zero()) continue;
      Polynomial<F> term = e * pf(mask & ~first & ~(std::uint64_t{1} << idx[pos]));
      // 1-based position pos+1 of the partner gives the sign (-1)^(pos+1)
      if (pos % 2 == 0) term = -term;
      sum += term;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

 private:
  const PolyMatrix<F>& a_;
  std::map<std::uint64_t, Polynomial<F>> memo_;
};

}  // namespace detail

// pf(A) by first-row expansion, normalized by pf([[0,a],[-a,0]]) = a.
template <Field F>
Polynomial<F> pfaffian(const PolyMatrix<F>& a) {
  if (auto d = skew_defect(a)) throw SkewError("pfaffian: " + *d);
  if (a.rows() % 2 != 0) throw SkewError("pfaffian: even size required");
  detail::PfaffianExpander<F> ex(a);
  return ex.pf(a.rows() == 0 ? 0 : (a.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.rows()) - 1));
}

// g_i = (-1)^(i+1) pf(A with row and column i deleted), i counted from 1; A g = 0.
template <Field F>
std::vector<Polynomial<F>> sub_pfaffians(const PolyMatrix<F>& a) {
  if (auto d = skew_defect(a)) throw SkewError("sub_pfaffians: " + *d);
  if (a.rows() % 2 != 1) throw SkewError("sub_pfaffians: odd size required");
  detail::PfaffianExpander<F> ex(a);
  const std::uint64_t all = (std::uint64_t{1} << a.rows()) - 1;
  std::vector<Polynomial<F>> g;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial<F> p = ex.pf(all & ~(std::uint64_t{1} << i));
    g.push_back(i % 2 == 0 ? p : -p);
  }
  return g;
}

// Twist data of the resolution attached to (a_1..a_{2p+1}, t).
struct PfaffianTwists {
  std::vector<int> e;  // twists a_j of E
  int t = 0;
  int s = 0;

  PfaffianTwists(std::vector<int> e_twists, int t_) : e(std::move(e_twists)), t(t_) {
    if (e.size() % 2 != 1) throw std::invalid_argument("E must have odd rank 2p+1");
    int p = static_cast<int>(e.size() / 2);
    s = std::accumulate(e.begin(), e.end(), 0) + p * t;
  }

  // The same data from the twists of F_1 and the last twist L = t + 2s (s chosen 0).
  static PfaffianTwists from_resolution(const Twists& f1, int last) {
    std::vector<int> e;
    for (int d : f1) e.push_back(-d);
    PfaffianTwists tw(e, last);
    if (tw.s != 0) throw std::invalid_argument("twists are not those of a Pfaffian resolution: c1 + p t != 0");
    return tw;
  }

  std::size_t rank() const { return e.size(); }
  Twists f1() const {
    Twists r;
    for (int a : e) r.push_back(s - a);
    return r;
  }
  Twists f2() const {
    Twists r;
    for (int a : e) r.push_back(t + s + a);
    return r;
  }
  int last() const { return t + 2 * s; }
  int entry_degree(std::size_t i, std::size_t j) const { return t + e[i] + e[j]; }
};

// The four-term complex with d1 = g^T, d2 = f, d3 = g.
template <Field F>
FreeComplex<F> build_pfaffian_resolution(const PfaffianTwists& tw, const PolyMatrix<F>& f) {
  if (f.rows() != tw.rank() || f.cols() != tw.rank())
    throw std::invalid_argument("skew matrix size " + std::to_string(f.rows()) + " does not match rank of E " +
                                std::to_string(tw.rank()));
  if (auto d = skew_defect(f)) throw SkewError("build: " + *d);
  const RingPtr<F>& ring = f.ring();
  auto g = sub_pfaffians(f);
  const std::size_t n = tw.rank();
  PolyMatrix<F> row(ring, 1, n), col(ring, n, 1);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = col(i, 0) = g[i];
  GradedMap<F> d1(tw.f1(), {0}, row);
  GradedMap<F> d2(tw.f2(), tw.f1(), f);
  GradedMap<F> d3({tw.last()}, tw.f2(), col);
  return FreeComplex<F>::from_maps(ring, 0, {d1, d2, d3});
}

// Skew matrix with random entries of the degrees forced by the twist data.
template <Field F>
PolyMatrix<F> random_skew(const RingPtr<F>& ring, const PfaffianTwists& tw, Rng& rng, double density = 1.0) {
  const std::size_t n = tw.rank();
  PolyMatrix<F> m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int d = tw.entry_degree(i, j);
      if (d < 0) continue;
      m(i, j) = random_form(ring, d, rng, density);
      m(j, i) = -m(i, j);
    }
  return m;
}

struct ParityReport {
  int n = 0;  // N - 3
  int l = 0;
  bool applies = false;
  std::optional<std::int64_t> chi;  // chi(O_X(l/2)) when l is even
  bool even = true;                 // verdict; vacuously true when not applicable
  // chi = 2 chi(O_P(l/2)) - 2 chi(E(l/2 - s)), checked when n and l are even
  std::optional<std::int64_t> identity_value;
  std::optional<bool> identity_holds;
  bool char2 = false;
};

// Parity data from the twists of a Pfaffian resolution of a subscheme of P^N.
template <Field F>
ParityReport parity_check(const FreeComplex<F>& c) {
  const int N = c.ring()->projective_dim();
  ParityReport r;
  r.n = N - 3;
  if (r.n <= 0) throw std::invalid_argument("parity check needs n = N - 3 > 0, got N = " + std::to_string(N));
  if (c.min_index() != 0 || c.max_index() != 3 || c.rank(3) != 1)
    throw std::invalid_argument("parity check needs a four-term resolution ending in rank one");
  const int L = c.module(3)[0];
  r.l = L - N - 1;
  r.char2 = c.ring()->characteristic() == 2;
  const bool l_even = r.l % 2 == 0;
  r.applies = l_even && (r.char2 ? r.n % 2 == 0 : r.n % 4 == 0);
  if (l_even) {
    const int m = r.l / 2;
    r.chi = euler_characteristic(c, m);
    if (r.n % 2 == 0) {
      std::int64_t v = 2 * chi_line_bundle(m, N);
      for (int d : c.module(1)) v -= 2 * chi_line_bundle(m - d, N);
      r.identity_value = v;
      r.identity_holds = v == *r.chi;
    }
  }
  r.even = !r.applies || (r.chi && *r.chi % 2 == 0);
  return r;
}

struct PfaffianCertificate {
  bool passed = false;
  int N = 0;
  int l = 0;  // omega_X = O_X(l)
  BECertificate exactness;
  DimensionReport codim;
  std::optional<ParityReport> parity;
  std::vector<std::string> violations;
};

// Checks that a four-term complex 0 -> S(-L) -> F_2 -> F_1 -> S resolves a codimension-3 subscheme.
template <Field F>
PfaffianCertificate certify_pfaffian_scheme(const FreeComplex<F>& c) {
  PfaffianCertificate cert;
  cert.N = c.ring()->projective_dim();
  if (c.min_index() != 0 || c.max_index() != 3 || c.rank(0) != 1 || c.rank(3) != 1 || c.module(0) != Twists{0} ||
      c.rank(1) != c.rank(2)) {
    cert.violations.push_back("complex does not have the shape 0 -> S(-L) -> F_2 -> F_1 -> S");
    return cert;
  }
  cert.l = c.module(3)[0] - cert.N - 1;
  cert.exactness = be_exactness_certificate(c);
  for (const auto& v : cert.exactness.violations) cert.violations.push_back("exactness: " + v);
  if (!cert.exactness.is_complex) return cert;
  Ideal<F> ideal(c.ring(), c.d(1).matrix().row(0));
  cert.codim = dimension(ideal);
  if (cert.codim.empty)
    cert.violations.push_back("codimension: the sub-Pfaffians generate the unit ideal");
  else if (cert.codim.codim != 3)
    cert.violations.push_back("codimension: ideal of sub-Pfaffians has codimension " + std::to_string(cert.codim.codim) +
                              ", expected 3");
  if (cert.N - 3 > 0) {
    cert.parity = parity_check(c);
    if (!cert.parity->even)
      cert.violations.push_back("parity: chi(O_X(l/2)) = " + std::to_string(*cert.parity->chi) + " is odd");
    if (cert.parity->identity_holds && !*cert.parity->identity_holds)
      cert.violations.push_back("parity: chi(O_X(l/2)) differs from 2 chi(O_P(l/2)) - 2 chi(E(l/2 - s))");
  }
  cert.passed = cert.violations.empty();
  return cert;
}

}  // namespace pfres

#endif  // PFRES_PFAFFIAN_HPP
