#ifndef PFRES_FIELD_HPP
#define PFRES_FIELD_HPP

// Coefficient fields: the prime fields F_p and the rationals.
//
// A field object carries whatever runtime data the arithmetic needs (the
// modulus for F_p) and exposes value_type plus the ring operations as member
// functions. Values themselves are plain data.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pfres {

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                  std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  // Decimal digits, no sign.
  value_type from_decimal(std::string_view digits) const {
    std::uint64_t r = 0;
    for (char ch : digits) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  // Symmetric representative, so small negative constants print as such.
  bool is_negative(value_type a) const { return a > p_ / 2; }
  std::string to_string(value_type a) const {
    if (is_negative(a)) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

class Rationals {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return value_type(z);
  }
  value_type from_decimal(std::string_view digits) const {
    return value_type(mpz_class(std::string(digits), 10));
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero in Q");
    return a / b;
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const { return true; }
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

}  // namespace pfres

#endif  // PFRES_FIELD_HPP
