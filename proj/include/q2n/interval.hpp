#pragma once

#include <iosfwd>

#include "q2n/rational.hpp"

namespace q2n {

/// Closed rational interval [lo, hi] with lo <= hi. Wherever an Interval is
/// produced by this library it encloses the true real value of the quantity
/// it stands for: all rounding is outward, so enclosure is never lost.
class Interval {
 public:
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& v) { return Interval(v, v); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }

  bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
  bool operator!=(const Interval& o) const { return !(*this == o); }

  /// Exact interval sum.
  Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }

  /// [|c| lo, |c| hi]; endpoints exact. Valid enclosure of |c| v for v >= 0.
  Interval scale_abs(const Rational& c) const;

  /// [lo^n, hi^n] for lo >= 0; monotone, endpoints exact.
  Interval pow_uint(unsigned n) const;

  /// Replace a negative lower endpoint by 0 (sound when the enclosed value
  /// is known to be nonnegative).
  Interval clamp_nonneg() const { return Interval(max(lo_, Rational(0)), max(hi_, Rational(0))); }

  /// True iff every point of *this exceeds every point of o.
  bool strictly_above(const Interval& o) const { return lo_ > o.hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

 private:
  Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// Enclosure of sqrt(q): returns [lo, hi] with lo^2 <= q <= hi^2 and
/// hi - lo <= eps. Exact point interval when q is a perfect rational square.
/// Requires q >= 0 and eps > 0.
///
/// Method: damped Newton from x0 = (q+1)/2 >= sqrt(q), which keeps the
/// bracket [q/x, x] valid at every step; iterates are rounded up to a dyadic
/// grid finer than eps/8 so endpoint sizes stay proportional to the
/// requested precision rather than doubling per iteration.
Interval interval_sqrt(const Rational& q, const Rational& eps);

/// Enclosure of q^(1/n) for q >= 0, n >= 1, by dyadic bisection:
/// lo^n <= q <= hi^n and hi - lo <= eps. Exact when q is a perfect n-th power.
Interval interval_root(const Rational& q, unsigned n, const Rational& eps);

}  // namespace q2n
