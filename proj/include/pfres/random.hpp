#ifndef PFRES_RANDOM_HPP
#define PFRES_RANDOM_HPP

// Seeded generation of "generic" instances. Everything is driven by
// std::mt19937_64 so a seed reproduces an instance exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "pfres/polynomial.hpp"

namespace pfres {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  // uniform in [lo, hi]
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

// Random coefficient: uniform mod p over F_p, a small integer in [-bound, bound] over Q.
template <Field F>
typename F::value_type random_coeff(const F& k, Rng& rng, long long bound = 9) {
  if (k.characteristic() != 0) return k.from_int(static_cast<long long>(rng.next() % k.characteristic()));
  return k.from_int(rng.uniform(-bound, bound));
}

// All monomials of degree d in n variables, in lexicographic exponent order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial::storage e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Homogeneous polynomial of degree d; density is the chance each monomial appears.
template <Field F>
Polynomial<F> random_form(const RingPtr<F>& ring, int d, Rng& rng, double density = 1.0) {
  std::vector<Term<F>> terms;
  for (auto& m : monomials_of_degree(ring->nvars(), d)) {
    bool take = density >= 1.0 || static_cast<double>(rng.next() % 1000000) / 1e6 < density;
    auto c = random_coeff(ring->field(), rng);
    if (take) terms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial<F>(ring, std::move(terms));
}

// Possibly inhomogeneous polynomial with terms of degree <= max_deg.
template <Field F>
Polynomial<F> random_poly(const RingPtr<F>& ring, int max_deg, std::size_t nterms, Rng& rng) {
  std::vector<Term<F>> terms;
  for (std::size_t i = 0; i < nterms; ++i) {
    Monomial::storage e(ring->nvars(), 0);
    int d = static_cast<int>(rng.uniform(0, max_deg));
    for (int j = 0; j < d; ++j) ++e[rng.next() % ring->nvars()];
    terms.push_back({Monomial(e), random_coeff(ring->field(), rng)});
  }
  return Polynomial<F>(ring, std::move(terms));
}

}  // namespace pfres

#endif  // PFRES_RANDOM_HPP
