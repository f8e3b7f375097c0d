#pragma once

// Exact integer with an int64 fast path. Values that leave the int64 range
// are promoted to GMP and demoted again as soon as they fit.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

namespace toricnash {

class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(v) {}
  explicit Integer(const mpz_class& v) { assign_big(v); }
  explicit Integer(std::string_view decimal);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = new mpz_class(*o.big_);
  }
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) {
    o.big_ = nullptr;
    o.small_ = 0;
  }
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (!o.big_) {
      delete big_;
      big_ = nullptr;
      small_ = o.small_;
    } else if (big_) {
      *big_ = *o.big_;
    } else {
      big_ = new mpz_class(*o.big_);
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.small_ = 0;
    return *this;
  }
  ~Integer() { delete big_; }

  bool is_small() const noexcept { return big_ == nullptr; }
  /// Only meaningful when is_small().
  std::int64_t small() const noexcept { return small_; }
  bool fits_int64() const noexcept { return big_ == nullptr; }
  std::int64_t to_int64() const;  // throws std::overflow_error
  mpz_class to_mpz() const;

  int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_add(o);
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_sub(o);
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_mul(o);
  }
  /// Truncating division, like the built-in operator on int.
  Integer& operator/=(const Integer& o);
  /// Remainder of truncating division (sign follows the dividend).
  Integer& operator%=(const Integer& o);

  Integer operator-() const {
    Integer r(*this);
    r.negate();
    return r;
  }
  void negate();

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never equals a small one
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void assign_big(const mpz_class& v);
  Integer& slow_add(const Integer& o);
  Integer& slow_sub(const Integer& o);
  Integer& slow_mul(const Integer& o);

  std::int64_t small_ = 0;
  mpz_class* big_ = nullptr;  // non-null iff the value does not fit in int64
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
/// Floor division and the matching nonnegative-remainder modulus (divisor > 0 for mod).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
/// Exact division; the caller guarantees b divides a.
Integer exact_div(const Integer& a, const Integer& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
struct ExtendedGcd {
  Integer g, s, t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace toricnash

template <>
struct std::hash<toricnash::Integer> {
  std::size_t operator()(const toricnash::Integer& v) const noexcept { return v.hash(); }
};
