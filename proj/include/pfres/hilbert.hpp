#ifndef PFRES_HILBERT_HPP
#define PFRES_HILBERT_HPP

// Hilbert series of monomial quotients S/J, S = k[x_0..x_{n-1}].

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pfres/monomial.hpp"

namespace pfres {

// C(n, k) for integer n (possibly negative) and k >= 0, as a polynomial in n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  // product (n)(n-1)...(n-k+1)/k! computed incrementally stays integral.
  __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<std::int64_t>(r);
}

// Number of monomials of degree d in n variables.
inline std::int64_t monomial_count(int n, std::int64_t d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(d + n - 1, n - 1);
}

// HS(t) = numerator(t) / (1-t)^nvars.
class HilbertSeries {
 public:
  HilbertSeries(std::vector<std::int64_t> numerator, int nvars)
      : num_(std::move(numerator)), nvars_(nvars) {
    trim(num_);
  }

  const std::vector<std::int64_t>& numerator() const { return num_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return num_.empty(); }

  // Krull dimension of S/J; -1 when S/J = 0.
  int dimension() const {
    if (num_.empty()) return -1;
    auto k = num_;
    int d = nvars_;
    while (d > 0 && std::accumulate(k.begin(), k.end(), std::int64_t{0}) == 0) {
      // divide by (1 - t)
      std::vector<std::int64_t> q(k.size() - 1);
      std::int64_t carry = 0;
      for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        carry += k[i];
        q[i] = carry;
      }
      k = std::move(q);
      --d;
    }
    return d;
  }

  // dim_k (S/J)_degree.
  std::int64_t value(std::int64_t degree) const {
    std::int64_t v = 0;
    for (std::size_t j = 0; j < num_.size(); ++j)
      if (num_[j] != 0) v += num_[j] * monomial_count(nvars_, degree - static_cast<std::int64_t>(j));
    return v;
  }

  static void trim(std::vector<std::int64_t>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

 private:
  std::vector<std::int64_t> num_;
  int nvars_;
};

namespace detail {

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<std::int64_t> poly_add(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

inline std::vector<std::int64_t> numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) ++count[i];
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < nvars; ++i)
    if (count[i] > count[pivot]) pivot = i;
  if (count[pivot] <= 1) {
    // pairwise coprime generators: product of (1 - t^deg)
    std::vector<std::int64_t> k{1};
    for (const auto& g : gens) {
      std::vector<std::int64_t> f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      k = poly_mul(k, f);
    }
    return k;
  }
  // K(J) = K(J + (x)) + t K(J : x)
  std::vector<Monomial> plus;
  std::vector<Monomial> colon;
  Monomial x = Monomial::variable(nvars, pivot);
  plus.push_back(x);
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    colon.push_back(g[pivot] > 0 ? quotient(g, x) : g);
  }
  auto a = numerator_rec(std::move(plus), nvars);
  auto b = numerator_rec(std::move(colon), nvars);
  b.insert(b.begin(), 0);
  auto r = poly_add(std::move(a), b);
  HilbertSeries::trim(r);
  return r;
}

}  // namespace detail

inline HilbertSeries hilbert_series(std::vector<Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("monomial has wrong number of variables");
  return HilbertSeries(detail::numerator_rec(std::move(gens), nvars), static_cast<int>(nvars));
}

}  // namespace pfres

#endif  // PFRES_HILBERT_HPP
