#ifndef PFRES_POLYNOMIAL_HPP
#define PFRES_POLYNOMIAL_HPP

// Graded polynomial rings k[x_0..x_N] and their sparse polynomials.

#include <algorithm>
#include <concepts>
#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfres/field.hpp"
#include "pfres/monomial.hpp"

namespace pfres {

template <Field F>
class Ring {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Ring(F field, std::vector<std::string> variables, TermOrder order = TermOrder::degrevlex)
      : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
    if (vars_.empty()) throw std::invalid_argument("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  // Dimension of the ambient projective space.
  int projective_dim() const { return static_cast<int>(vars_.size()) - 1; }
  TermOrder order() const { return order_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  static bool is_identifier(const std::string& v) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) return false;
    return std::all_of(v.begin(), v.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

  F field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

template <Field F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <Field F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables,
                     TermOrder order = TermOrder::degrevlex) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(variables), order);
}

// Ring with variables x0..x{n-1}.
template <Field F>
RingPtr<F> make_ring(F field, std::size_t nvars, TermOrder order = TermOrder::degrevlex) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(field), std::move(names), order);
}

template <Field F>
struct Term {
  Monomial mono;
  typename F::value_type coeff;
};

enum class DegreeKind { zero, homogeneous, inhomogeneous };

struct DegreeStatus {
  DegreeKind kind;
  int degree = 0;  // meaningful for homogeneous only

  std::optional<int> value() const {
    if (kind == DegreeKind::homogeneous) return degree;
    return std::nullopt;
  }
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

template <Field F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using term_type = Term<F>;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  // Takes terms in any order; sorts, merges duplicates and drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<term_type> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial constant(RingPtr<F> ring, value_type c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }
  template <std::integral I>
  static Polynomial constant(RingPtr<F> ring, I c) {
    auto v = ring->field().from_int(static_cast<long long>(c));
    return constant(ring, std::move(v));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), i), ring->field().one()});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, value_type c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const term_type& leading_term() const { return terms_.front(); }

  // Constant coefficient, zero if absent.
  value_type constant_coefficient() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return field().zero();
  }

  DegreeStatus degree_status() const {
    if (terms_.empty()) return {DegreeKind::zero, 0};
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return {DegreeKind::inhomogeneous, 0};
    return {DegreeKind::homogeneous, d};
  }
  bool is_homogeneous() const { return degree_status().kind != DegreeKind::inhomogeneous; }
  // Largest total degree of a term; -1 for zero.
  int max_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    return Polynomial(a.ring_, merge(a, b, false), raw_tag{});
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    return Polynomial(a.ring_, merge(a, b, true), raw_tag{});
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const F& k = a.field();
    if (b.terms_.size() == 1) return a.scale_shift(b.terms_[0].coeff, b.terms_[0].mono);
    if (a.terms_.size() == 1) return b.scale_shift(a.terms_[0].coeff, a.terms_[0].mono);
    if (a.terms_.size() * b.terms_.size() <= 256) {
      std::vector<term_type> out;
      out.reserve(a.terms_.size() * b.terms_.size());
      for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
      return Polynomial(a.ring_, std::move(out));
    }
    if (auto packed = packed_product(a, b)) return std::move(*packed);
    // large products usually collapse onto far fewer monomials: accumulate in a hash table
    std::unordered_map<Monomial, value_type, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, fresh] = acc.try_emplace(s.mono * t.mono, k.mul(s.coeff, t.coeff));
        if (!fresh) it->second = k.add(it->second, k.mul(s.coeff, t.coeff));
      }
    std::vector<term_type> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!k.is_zero(c)) out.push_back({m, std::move(c)});
    return Polynomial(a.ring_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const value_type& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  // c * m * this; the order is multiplicative so no re-sorting is needed.
  Polynomial scale_shift(const value_type& c, const Monomial& m) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(terms_.front().coeff));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty()) check_same_ring(a, b);
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
      if (!a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }

  static bool same_ring(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ || *a.ring_ == *b.ring_;
  }

 private:
  struct raw_tag {};
  Polynomial(RingPtr<F> ring, std::vector<term_type> sorted_terms, raw_tag)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  // Product with exponent vectors packed into one 64-bit word, when they fit.
  static std::optional<Polynomial> packed_product(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = a.ring_->nvars();
    const int maxdeg = a.max_degree() + b.max_degree();
    unsigned bits = 1;
    while ((1 << bits) <= maxdeg) ++bits;
    if (n * bits > 64) return std::nullopt;
    auto pack = [&](const Monomial& m) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(m[i]) << (bits * i);
      return key;
    };
    std::vector<std::uint64_t> kb;
    kb.reserve(b.terms_.size());
    for (const auto& t : b.terms_) kb.push_back(pack(t.mono));
    const F& k = a.field();
    // open addressing on the packed keys; key 0 (the constant monomial) is kept separately
    std::size_t cap = 16;
    while (cap < 2 * std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 22)) cap <<= 1;
    std::vector<std::uint64_t> keys(cap, 0);
    std::vector<value_type> vals(cap, k.zero());
    std::size_t used = 0;
    value_type const_term = k.zero();
    for (const auto& s : a.terms_) {
      const std::uint64_t ka = pack(s.mono);
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        const std::uint64_t key = ka + kb[j];
        auto c = k.mul(s.coeff, b.terms_[j].coeff);
        if (key == 0) {
          const_term = k.add(const_term, c);
          continue;
        }
        std::size_t h = static_cast<std::size_t>((key * 0x9e3779b97f4a7c15ull) >> 20) & (cap - 1);
        while (keys[h] != 0 && keys[h] != key) h = (h + 1) & (cap - 1);
        if (keys[h] == 0) {
          keys[h] = key;
          vals[h] = std::move(c);
          if (++used * 2 > cap) return std::nullopt;  // table too full, use the general path
        } else {
          vals[h] = k.add(vals[h], c);
        }
      }
    }
    std::vector<term_type> out;
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    auto emit = [&](std::uint64_t key, value_type c) {
      if (k.is_zero(c)) return;
      Monomial::storage e(n);
      for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<Monomial::exponent_type>((key >> (bits * v)) & mask);
      out.push_back({Monomial(std::move(e)), std::move(c)});
    };
    for (std::size_t h = 0; h < cap; ++h)
      if (keys[h] != 0) emit(keys[h], std::move(vals[h]));
    emit(0, std::move(const_term));
    return Polynomial(a.ring_, std::move(out));
  }

  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a, b)) throw RingMismatch();
  }

  static std::vector<term_type> merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    const F& k = a.field();
    const TermOrder ord = a.ring_->order();
    std::vector<term_type> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = compare(a.terms_[i].mono, b.terms_[j].mono, ord);
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        out.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        auto v = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                          : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(v)) out.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void normalize() {
    const TermOrder ord = ring_->order();
    const F& k = field();
    for (const auto& t : terms_)
      if (t.mono.nvars() != ring_->nvars()) throw std::invalid_argument("monomial has wrong number of variables");
    std::sort(terms_.begin(), terms_.end(),
              [ord](const term_type& a, const term_type& b) { return compare(a.mono, b.mono, ord) > 0; });
    std::vector<term_type> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<term_type> terms_;
};

// Exact quotient a / b; throws if b does not divide a.
template <Field F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const F& k = a.field();
  const auto& lead = b.leading_term();
  const auto lead_inv = k.inv(lead.coeff);
  Polynomial<F> rest = a;
  std::vector<Term<F>> q;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
    Monomial m = quotient(t.mono, lead.mono);
    auto c = k.mul(t.coeff, lead_inv);
    rest -= b.scale_shift(c, m);
    q.push_back({std::move(m), std::move(c)});
  }
  return Polynomial<F>(a.ring(), std::move(q));
}

}  // namespace pfres

#endif  // PFRES_POLYNOMIAL_HPP
