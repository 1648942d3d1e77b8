#ifndef PFRES_GRADED_HPP
#define PFRES_GRADED_HPP

// Graded free modules, degree-checked maps between them, and complexes.
//
// A twist list (a_1..a_m) stands for the free module sum_j S(-a_j). A map
// F -> G is a rows(G) x rows(F) matrix whose (i,j) entry is homogeneous of
// degree a_j - b_i (source twist a_j, target twist b_i) or zero.
// Complexes use homological indexing: d_k : F_k -> F_{k-1}.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfres/hilbert.hpp"
#include "pfres/matrix.hpp"

namespace pfres {

using Twists = std::vector<int>;

// dim_k S(-a)_t on P^N (N+1 variables).
inline std::int64_t free_hilbert(int nvars, const Twists& twists, std::int64_t t) {
  std::int64_t s = 0;
  for (int a : twists) s += monomial_count(nvars, t - a);
  return s;
}

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAComplex : public std::invalid_argument {
 public:
  NotAComplex(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
  // d_index o d_{index+1} != 0
  int index() const { return index_; }

 private:
  int index_;
};

template <Field F>
class GradedMap {
 public:
  using poly = Polynomial<F>;

  GradedMap(Twists source, Twists target, PolyMatrix<F> m)
      : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)) {
    if (m_.rows() != target_.size() || m_.cols() != source_.size())
      throw std::invalid_argument("graded map: matrix is " + std::to_string(m_.rows()) + "x" +
                                  std::to_string(m_.cols()) + " but twists need " + std::to_string(target_.size()) +
                                  "x" + std::to_string(source_.size()));
    if (auto bad = degree_violation()) throw DegreeError(*bad);
  }

  static GradedMap zero(const RingPtr<F>& ring, Twists source, Twists target) {
    PolyMatrix<F> m(ring, target.size(), source.size());
    return GradedMap(std::move(source), std::move(target), std::move(m));
  }
  static GradedMap identity(const RingPtr<F>& ring, const Twists& tw) {
    return GradedMap(tw, tw, PolyMatrix<F>::identity(ring, tw.size()));
  }

  const RingPtr<F>& ring() const { return m_.ring(); }
  const Twists& source() const { return source_; }
  const Twists& target() const { return target_; }
  const PolyMatrix<F>& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_zero() const { return m_.is_zero(); }

  // Every entry lies in the irrelevant ideal.
  bool is_minimal() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (!m_(i, j).is_zero() && m_(i, j).is_constant()) return false;
    return true;
  }

  // this o other
  GradedMap compose(const GradedMap& other) const {
    if (other.target_ != source_) throw DegreeError("composition: twist lists do not match");
    return GradedMap(other.source_, target_, m_ * other.m_);
  }

  // Hom(-, S(-e)): S(-b)^vee(-e) = S(-(e-b)).
  GradedMap dual(int e) const {
    Twists s, t;
    for (int b : target_) s.push_back(e - b);
    for (int a : source_) t.push_back(e - a);
    return GradedMap(std::move(s), std::move(t), m_.transpose());
  }

  GradedMap negated() const { return GradedMap(source_, target_, -m_); }
  GradedMap shifted(int d) const {
    Twists s = source_, t = target_;
    for (int& a : s) a += d;
    for (int& b : t) b += d;
    return GradedMap(std::move(s), std::move(t), m_);
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.m_ == b.m_;
  }

  std::optional<std::string> degree_violation() const {
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        const auto& p = m_(i, j);
        if (p.is_zero()) continue;
        auto st = p.degree_status();
        int want = source_[j] - target_[i];
        if (st.kind != DegreeKind::homogeneous || st.degree != want) {
          std::ostringstream os;
          os << "entry (" << i << "," << j << ") must be homogeneous of degree " << want;
          return os.str();
        }
      }
    return std::nullopt;
  }

 private:
  Twists source_, target_;
  PolyMatrix<F> m_;
};

// Bounded complex F_lo <- ... <- F_hi with d_k : F_k -> F_{k-1}.
template <Field F>
class FreeComplex {
 public:
  // maps[i] is d_{lo+1+i}; modules[i] is F_{lo+i}.
  FreeComplex(RingPtr<F> ring, int lo, std::vector<Twists> modules, std::vector<GradedMap<F>> maps)
      : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), maps_(std::move(maps)) {
    if (modules_.empty()) {
      if (!maps_.empty()) throw std::invalid_argument("complex: maps without modules");
    } else if (maps_.size() + 1 != modules_.size()) {
      throw std::invalid_argument("complex: need one map between each pair of consecutive modules");
    }
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      if (maps_[i].source() != modules_[i + 1] || maps_[i].target() != modules_[i])
        throw DegreeError("complex: d_" + std::to_string(lo_ + 1 + static_cast<int>(i)) +
                          " does not match the module twists");
    }
    if (auto k = composition_failure()) throw NotAComplex("d_" + std::to_string(*k) + " o d_" + std::to_string(*k + 1) + " != 0", *k);
  }

  // Complex built from consecutive maps d_{lo+1}, d_{lo+2}, ...
  static FreeComplex from_maps(RingPtr<F> ring, int lo, std::vector<GradedMap<F>> maps) {
    std::vector<Twists> mods;
    if (maps.empty()) throw std::invalid_argument("from_maps needs at least one map");
    mods.push_back(maps[0].target());
    for (const auto& m : maps) mods.push_back(m.source());
    return FreeComplex(std::move(ring), lo, std::move(mods), std::move(maps));
  }

  static FreeComplex single(RingPtr<F> ring, int index, Twists module) {
    return FreeComplex(std::move(ring), index, {std::move(module)}, {});
  }

  const RingPtr<F>& ring() const { return ring_; }
  bool empty() const { return modules_.empty(); }
  int min_index() const { return lo_; }
  int max_index() const { return lo_ + static_cast<int>(modules_.size()) - 1; }

  const Twists& module(int k) const {
    static const Twists none;
    if (k < lo_ || k > max_index()) return none;
    return modules_[static_cast<std::size_t>(k - lo_)];
  }
  std::size_t rank(int k) const { return module(k).size(); }

  // d_k : F_k -> F_{k-1}; the zero map outside the stored range.
  GradedMap<F> d(int k) const {
    if (k > lo_ && k <= max_index()) return maps_[static_cast<std::size_t>(k - lo_ - 1)];
    return GradedMap<F>::zero(ring_, module(k), module(k - 1));
  }
  const std::vector<Twists>& modules() const { return modules_; }
  const std::vector<GradedMap<F>>& maps() const { return maps_; }

  bool is_minimal() const {
    return std::all_of(maps_.begin(), maps_.end(), [](const auto& m) { return m.is_minimal(); });
  }

  // Betti numbers: (index, twist) -> multiplicity.
  std::map<std::pair<int, int>, int> betti() const {
    std::map<std::pair<int, int>, int> b;
    for (int k = lo_; k <= max_index(); ++k)
      for (int a : module(k)) ++b[{k, a}];
    return b;
  }

  // First k with d_k d_{k+1} != 0.
  std::optional<int> composition_failure() const {
    for (std::size_t i = 0; i + 1 < maps_.size(); ++i)
      if (!maps_[i].compose(maps_[i + 1]).is_zero()) return lo_ + 1 + static_cast<int>(i);
    return std::nullopt;
  }

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    return a.lo_ == b.lo_ && a.modules_ == b.modules_ && a.maps_ == b.maps_;
  }

  // Drops zero modules at both ends.
  FreeComplex trimmed() const {
    int lo = lo_, hi = max_index();
    while (lo <= hi && module(lo).empty()) ++lo;
    while (hi >= lo && module(hi).empty()) --hi;
    return slice(lo, hi);
  }

  // Terms with lo <= k <= hi (clamped), maps between them.
  FreeComplex slice(int lo, int hi) const {
    lo = std::max(lo, lo_);
    hi = std::min(hi, max_index());
    if (lo > hi) return FreeComplex(ring_, 0, {}, {});
    std::vector<Twists> mods;
    std::vector<GradedMap<F>> maps;
    for (int k = lo; k <= hi; ++k) {
      mods.push_back(module(k));
      if (k > lo) maps.push_back(d(k));
    }
    return FreeComplex(ring_, lo, std::move(mods), std::move(maps));
  }

 private:
  RingPtr<F> ring_;
  int lo_;
  std::vector<Twists> modules_;
  std::vector<GradedMap<F>> maps_;
};

// The module coker(P : F_1 -> F_0).
template <Field F>
class PresentedModule {
 public:
  explicit PresentedModule(GradedMap<F> p) : p_(std::move(p)) {}

  // Free module with the given generators and no relations.
  static PresentedModule free(const RingPtr<F>& ring, Twists gens) {
    return PresentedModule(GradedMap<F>::zero(ring, {}, std::move(gens)));
  }

  const GradedMap<F>& presentation() const { return p_; }
  const RingPtr<F>& ring() const { return p_.ring(); }
  const Twists& generators() const { return p_.target(); }
  const Twists& relations() const { return p_.source(); }

 private:
  GradedMap<F> p_;
};

}  // namespace pfres

#endif  // PFRES_GRADED_HPP
