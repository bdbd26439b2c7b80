#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "q2n/errors.hpp"

namespace q2n {

/// Exact rational scalar. Always held in canonical form: positive
/// denominator, gcd(|num|, den) = 1. Every operation is exact; this type
/// never rounds. Irrational values are represented elsewhere, as Interval
/// enclosures with Rational endpoints.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);

  /// Parse "p/q" or "p" (optional sign, arbitrary precision). Lenient on a
  /// negative denominator; the result is canonicalized.
  static Rational parse(std::string_view text);

  /// 2^k for any integer k (negative k gives 1/2^|k|).
  static Rational pow2(long k);

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  int sgn() const { return ::sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Integer power, exact. Negative exponents require a nonzero base.
  Rational pow_int(long e) const;

  /// floor(x) and ceil(x) as exact integers.
  Rational floor() const;
  Rational ceil() const;

  /// Round to the dyadic grid of step 2^-bits, toward -inf / +inf.
  /// Used to keep interval endpoints small without losing soundness.
  Rational round_down_dyadic(unsigned bits) const;
  Rational round_up_dyadic(unsigned bits) const;

  /// True iff the value is a square of a rational; sqrt_exact then returns it.
  bool is_perfect_square() const;
  Rational sqrt_exact() const;

  /// Exact n-th root when one exists (value must be >= 0).
  bool is_perfect_power(unsigned n) const;
  Rational root_exact(unsigned n) const;

  /// Canonical wire form "p/q", denominator always written (e.g. "3/1").
  std::string str() const;

  /// Approximate double, for display/interop only; never used internally.
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace q2n
