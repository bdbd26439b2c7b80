#include "q2n/interval.hpp"

#include <ostream>

namespace q2n {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw DomainError("interval endpoints out of order");
}

Interval Interval::scale_abs(const Rational& c) const {
  Rational a = c.abs();
  return Interval(lo_ * a, hi_ * a);
}

Interval Interval::pow_uint(unsigned n) const {
  if (lo_.sgn() < 0) throw DomainError("pow_uint requires a nonnegative interval");
  return Interval(lo_.pow_int(static_cast<long>(n)), hi_.pow_int(static_cast<long>(n)));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << "[" << iv.lo() << ", " << iv.hi() << "]";
}

namespace {

// Smallest m with 2^-m <= v. Requires v > 0.
unsigned grid_bits_for(const Rational& v) {
  unsigned m = 0;
  Rational p(1);
  while (p > v) {
    p = p / Rational(2);
    ++m;
    if (m > 1u << 20) throw DomainError("tolerance too small");
  }
  return m;
}

}  // namespace

Interval interval_sqrt(const Rational& q, const Rational& eps) {
  if (q.sgn() < 0) throw DomainError("interval_sqrt of a negative value");
  if (eps.sgn() <= 0) throw DomainError("interval_sqrt requires eps > 0");
  if (q.is_zero()) return Interval::point(Rational(0));
  if (q.is_perfect_square()) return Interval::point(q.sqrt_exact());

  const unsigned grid = grid_bits_for(eps) + 3;  // grid step <= eps/8
  const Rational stop = eps * Rational(3, 4);

  // AM-GM: (q+1)/2 >= sqrt(q); rounding up preserves the upper bracket.
  Rational x = ((q + Rational(1)) / Rational(2)).round_up_dyadic(grid);
  Rational lo = q / x;
  int guard = 0;
  while (x - lo > stop) {
    x = ((x + lo) / Rational(2)).round_up_dyadic(grid);
    lo = q / x;
    if (++guard > 512) throw DomainError("interval_sqrt failed to converge");
  }
  return Interval(lo.round_down_dyadic(grid + 3), x);
}

Interval interval_root(const Rational& q, unsigned n, const Rational& eps) {
  if (n == 0) throw DomainError("0th root");
  if (q.sgn() < 0) throw DomainError("interval_root of a negative value");
  if (eps.sgn() <= 0) throw DomainError("interval_root requires eps > 0");
  if (n == 1 || q.is_zero()) return Interval::point(q);
  if (q.is_perfect_power(n)) return Interval::point(q.root_exact(n));

  Rational lo(1), hi = q;
  if (q < Rational(1)) {
    lo = q;
    hi = Rational(1);
  }
  int guard = 0;
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / Rational(2);
    Rational p = mid.pow_int(static_cast<long>(n));
    if (p == q) return Interval::point(mid);
    (p < q ? lo : hi) = mid;
    if (++guard > 100000) throw DomainError("interval_root failed to converge");
  }
  return Interval(lo, hi);
}

}  // namespace q2n
