#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace dihom {

/// The prime field GF(p). Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime, got " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }
  bool is_gf2() const { return p_ == 2; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(a + (p_ - b)); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  std::string name() const { return p_ == 2 ? "gf2" : "gf:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

/// The rationals, with arbitrary-precision numerator and denominator kept in lowest terms.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "rational"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.name() } -> std::convertible_to<std::string>;
};

template <class F>
constexpr bool is_prime_field_v = std::is_same_v<F, PrimeField>;

}  // namespace dihom
