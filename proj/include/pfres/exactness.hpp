#ifndef PFRES_EXACTNESS_HPP
#define PFRES_EXACTNESS_HPP

// Buchsbaum-Eisenbud exactness criterion for bounded free complexes
// 0 -> F_n -> ... -> F_0: the complex is acyclic iff
//   rank F_k = r_k + r_{k+1}   and   grade I_{r_k}(d_k) >= k   for k >= 1,
// where r_k is the rank of d_k over the fraction field.

#include <string>
#include <utility>
#include <vector>

#include "pfres/graded.hpp"
#include "pfres/groebner.hpp"

namespace pfres {

// Grade of the unit ideal.
inline constexpr int infinite_grade = 1 << 20;

inline std::string grade_to_string(int g) { return g >= infinite_grade ? "inf" : std::to_string(g); }

enum class ExactnessMode {
  resolution,  // exact at every position except the lowest
  acyclic,     // also surjective onto the lowest module
  punctured,   // sheafified complex exact everywhere (conditions checked away from the irrelevant ideal)
};

struct MinorGrade {
  int grade = 0;        // infinite_grade for the unit ideal
  bool exact = true;    // false: lower bound from a subset of the minors
  std::size_t minors_used = 0;
};

// Grade of I_r(A). With more than cap minors, minors are added in batches until the grade
// reaches need; the result is then only a lower bound (ideal of a subset of the minors).
template <Field F>
MinorGrade minor_ideal_grade(const PolyMatrix<F>& a, std::size_t r, int need, std::size_t cap = 600) {
  MinorGrade out;
  if (r == 0) {
    out.grade = infinite_grade;
    return out;
  }
  auto grade_of = [&](const std::vector<Polynomial<F>>& gens) {
    Ideal<F> ideal(a.ring(), gens);
    auto rep = dimension(ideal);
    return rep.empty ? infinite_grade : rep.codim;
  };
  const std::size_t total = choose(a.rows(), r) * choose(a.cols(), r);
  if (total <= cap) {
    auto gens = minors(a, r);
    out.minors_used = gens.size();
    out.grade = grade_of(gens);
    return out;
  }
  std::size_t batch = std::max<std::size_t>(static_cast<std::size_t>(std::max(need, 1)) * 2, 8);
  for (;;) {
    auto gens = minors(a, r, batch);
    out.minors_used = gens.size();
    out.grade = grade_of(gens);
    bool all = gens.size() < batch;
    if (all) return out;
    out.exact = false;
    if (out.grade >= need) return out;
    batch *= 2;
  }
}

struct BEPosition {
  int index = 0;               // homological index k
  std::size_t module_rank = 0; // rank F_k
  std::size_t map_rank = 0;    // r_k = rank d_k (0 at the bottom)
  int grade = infinite_grade;  // grade of I_{r_k}(d_k)
  bool grade_exact = true;
  int required_grade = 0;
  bool rank_ok = true;
  bool grade_ok = true;
};

struct BECertificate {
  bool exact = false;
  bool is_complex = true;
  ExactnessMode mode = ExactnessMode::resolution;
  std::vector<BEPosition> positions;  // from the lowest index upward
  std::vector<std::string> violations;
};

template <Field F>
BECertificate be_exactness_certificate(const FreeComplex<F>& c, ExactnessMode mode = ExactnessMode::resolution) {
  BECertificate cert;
  cert.mode = mode;
  if (auto k = c.composition_failure()) {
    cert.is_complex = false;
    cert.violations.push_back("not a complex: d_" + std::to_string(*k) + " o d_" + std::to_string(*k + 1) + " != 0");
    return cert;
  }
  if (c.empty()) {
    cert.exact = true;
    return cert;
  }
  const int lo = c.min_index(), hi = c.max_index();
  const int nv = static_cast<int>(c.ring()->nvars());
  std::vector<std::size_t> r(static_cast<std::size_t>(hi - lo + 2), 0);  // r[k-lo] = rank d_k
  for (int k = lo + 1; k <= hi; ++k) r[static_cast<std::size_t>(k - lo)] = rank(c.d(k).matrix());

  for (int k = lo; k <= hi; ++k) {
    BEPosition p;
    const int pos = k - lo;
    p.index = k;
    p.module_rank = c.rank(k);
    p.map_rank = r[static_cast<std::size_t>(pos)];
    const std::size_t above = r[static_cast<std::size_t>(pos + 1)];
    if (pos == 0) {
      if (mode == ExactnessMode::resolution) {
        p.required_grade = 0;
        cert.positions.push_back(p);
        continue;
      }
      // surjectivity of d_{lo+1}: I_{rank F_lo}(d_{lo+1}) must be the unit ideal (or m-primary on the punctured spectrum)
      p.rank_ok = p.module_rank == above;
      p.required_grade = mode == ExactnessMode::acyclic ? infinite_grade : nv;
      if (p.module_rank == 0) {
        p.grade = infinite_grade;
      } else if (p.rank_ok) {
        auto g = minor_ideal_grade(c.d(lo + 1).matrix(), above, p.required_grade);
        p.grade = g.grade;
        p.grade_exact = g.exact;
      } else {
        p.grade = 0;
      }
    } else {
      p.rank_ok = p.module_rank == p.map_rank + above;
      p.required_grade = mode == ExactnessMode::punctured ? std::min(pos, nv) : pos;
      auto g = minor_ideal_grade(c.d(k).matrix(), p.map_rank, p.required_grade);
      p.grade = g.grade;
      p.grade_exact = g.exact;
    }
    p.grade_ok = p.grade >= p.required_grade;
    if (!p.rank_ok)
      cert.violations.push_back("rank condition fails at F_" + std::to_string(k) + ": rank " +
                                std::to_string(p.module_rank) + " != " + std::to_string(p.map_rank) + " + " +
                                std::to_string(above));
    if (!p.grade_ok)
      cert.violations.push_back("grade condition fails at F_" + std::to_string(k) + ": grade " +
                                grade_to_string(p.grade) + " < " + grade_to_string(p.required_grade));
    cert.positions.push_back(p);
  }
  cert.exact = cert.violations.empty();
  return cert;
}

inline std::string to_string(ExactnessMode m) {
  switch (m) {
    case ExactnessMode::resolution: return "resolution";
    case ExactnessMode::acyclic: return "acyclic";
    case ExactnessMode::punctured: return "punctured";
  }
  return "?";
}

}  // namespace pfres

#endif  // PFRES_EXACTNESS_HPP
