#include "toricnash/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace toricnash {

namespace {

bool mpz_fits_int64(const mpz_class& v) {
  // mpz_fits_slong_p is exact for LP64, which is the only target we build for.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

mpz_class from_int64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(std::string_view decimal) {
  mpz_class v;
  std::string s(decimal);
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  assign_big(v);
}

void Integer::assign_big(const mpz_class& v) {
  if (mpz_fits_int64(v)) {
    delete big_;
    big_ = nullptr;
    small_ = mpz_get_si(v.get_mpz_t());
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = new mpz_class(v);
    small_ = 0;
  }
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

Integer& Integer::slow_add(const Integer& o) {
  assign_big(to_mpz() + o.to_mpz());
  return *this;
}
Integer& Integer::slow_sub(const Integer& o) {
  assign_big(to_mpz() - o.to_mpz());
  return *this;
}
Integer& Integer::slow_mul(const Integer& o) {
  assign_big(to_mpz() * o.to_mpz());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  assign_big(q);
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    if (o.small_ == -1) {
      small_ = 0;
    } else {
      small_ %= o.small_;
    }
    return *this;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  assign_big(r);
  return *this;
}

void Integer::negate() {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
    small_ = -small_;
    return;
  }
  assign_big(-to_mpz());
}

std::string Integer::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->get_str(10);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() != std::numeric_limits<std::int64_t>::min() &&
      b.small() != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small() < 0 ? -a.small() : a.small();
    std::int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small() == std::numeric_limits<std::int64_t>::min() && b.small() == -1)) {
    std::int64_t q = a.small() / b.small();
    std::int64_t r = a.small() % b.small();
    if (r != 0 && ((r < 0) != (b.small() < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  if (b.sign() <= 0) throw std::domain_error("floor_mod requires a positive modulus");
  if (a.is_small() && b.is_small()) {
    std::int64_t r = a.small() % b.small();
    if (r < 0) r += b.small();
    return Integer(r);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small() == std::numeric_limits<std::int64_t>::min() && b.small() == -1)) {
    return Integer(a.small() / b.small());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  // Iterative Euclid on Integer values; intermediate cofactors stay bounded by |a|,|b|.
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r.sign() < 0) {
    old_r.negate();
    old_s.negate();
    old_t.negate();
  }
  return {old_r, old_s, old_t};
}

}  // namespace toricnash
