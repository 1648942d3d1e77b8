#ifndef PFRES_KOSZUL_HPP
#define PFRES_KOSZUL_HPP

// Koszul complex K(f_1..f_n): F_k = Lambda^k S^n on the lexicographically
// ordered k-subsets, d(e_I) = sum_t (-1)^t f_{i_t} e_{I - i_t}.

#include <vector>

#include "pfres/graded.hpp"

namespace pfres {

template <Field F>
FreeComplex<F> koszul_complex(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& f) {
  const std::size_t n = f.size();
  std::vector<int> deg;
  for (const auto& g : f) {
    auto st = g.degree_status();
    if (st.kind != DegreeKind::homogeneous) throw std::invalid_argument("koszul_complex needs nonzero homogeneous entries");
    deg.push_back(st.degree);
  }
  std::vector<std::vector<std::vector<std::size_t>>> subsets(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      subsets[k].push_back(s);
      return true;
    });
  std::vector<Twists> mods;
  for (std::size_t k = 0; k <= n; ++k) {
    Twists t;
    for (const auto& s : subsets[k]) {
      int a = 0;
      for (auto i : s) a += deg[i];
      t.push_back(a);
    }
    mods.push_back(std::move(t));
  }
  std::vector<GradedMap<F>> maps;
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix<F> m(ring, subsets[k - 1].size(), subsets[k].size());
    for (std::size_t j = 0; j < subsets[k].size(); ++j) {
      const auto& s = subsets[k][j];
      for (std::size_t t = 0; t < s.size(); ++t) {
        std::vector<std::size_t> rest;
        for (std::size_t u = 0; u < s.size(); ++u)
          if (u != t) rest.push_back(s[u]);
        std::size_t row = 0;
        while (subsets[k - 1][row] != rest) ++row;
        m(row, j) = t % 2 == 0 ? f[s[t]] : -f[s[t]];
      }
    }
    maps.emplace_back(mods[k], mods[k - 1], std::move(m));
  }
  return FreeComplex<F>(ring, 0, std::move(mods), std::move(maps));
}

}  // namespace pfres

#endif  // PFRES_KOSZUL_HPP
