#ifndef PFRES_MONOMIAL_HPP
#define PFRES_MONOMIAL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/container/small_vector.hpp>

namespace pfres {

enum class TermOrder { degrevlex, deglex, lex };

inline std::string to_string(TermOrder o) {
  switch (o) {
    case TermOrder::degrevlex: return "degrevlex";
    case TermOrder::deglex: return "deglex";
    case TermOrder::lex: return "lex";
  }
  return "?";
}

inline TermOrder term_order_from_string(const std::string& s) {
  if (s == "degrevlex" || s == "grevlex") return TermOrder::degrevlex;
  if (s == "deglex" || s == "glex") return TermOrder::deglex;
  if (s == "lex") return TermOrder::lex;
  throw std::invalid_argument("unknown term order '" + s + "'");
}

// Exponent vector with cached total degree. All monomials of one ring share
// the same length.
class Monomial {
 public:
  using exponent_type = std::int32_t;
  using storage = boost::container::small_vector<exponent_type, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(storage exps) : exps_(std::move(exps)) {
    std::int64_t d = 0;
    for (auto e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      d += e;
    }
    degree_ = checked(d);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, exponent_type power = 1) {
    Monomial m(nvars);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const storage& exponents() const { return exps_; }

  // Bit i set iff variable i (mod 64) occurs; a cheap divisibility prefilter.
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) m |= std::uint64_t{1} << (i & 63);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = checked(static_cast<std::int64_t>(a.exps_[i]) + b.exps_[i]);
    r.degree_ = checked(static_cast<std::int64_t>(a.degree_) + b.degree_);
    return r;
  }

  bool divides(const Monomial& b) const {
    if (degree_ > b.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  // b / a, assuming a | b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    r.exps_.resize(b.exps_.size());
    for (std::size_t i = 0; i < b.exps_.size(); ++i) r.exps_[i] = b.exps_[i] - a.exps_[i];
    r.degree_ = b.degree_ - a.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.exps_.size());
    exponent_type d = 0;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  Monomial pow(exponent_type k) const {
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = checked(static_cast<std::int64_t>(exps_[i]) * k);
    r.degree_ = checked(static_cast<std::int64_t>(degree_) * k);
    return r;
  }

 private:
  static exponent_type checked(std::int64_t v) {
    if (v > std::numeric_limits<exponent_type>::max())
      throw std::overflow_error("monomial exponent overflow");
    return static_cast<exponent_type>(v);
  }

  storage exps_;
  exponent_type degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto e : m.exponents()) h = (h ^ static_cast<std::uint64_t>(e)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Three-way comparison under a term order: >0 if a > b.
inline int compare(const Monomial& a, const Monomial& b, TermOrder order) {
  const std::size_t n = a.nvars();
  switch (order) {
    case TermOrder::degrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case TermOrder::deglex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      [[fallthrough]];
    case TermOrder::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
  }
  return 0;
}

}  // namespace pfres

#endif  // PFRES_MONOMIAL_HPP
