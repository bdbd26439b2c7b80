// Test-side oracles, deliberately independent of the library's evaluation
// paths: plain gmpxx arithmetic, no q2n::Interval / norm_eval involved.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace oracles {

// Bracket [lo, hi] around sqrt(k) from the plain Newton iteration
// x <- (x + k/x)/2 started above the root; lo = k/x. Pure mpq loop.
inline std::pair<mpq_class, mpq_class> newton_sqrt_bracket(const mpq_class& k,
                                                           const mpq_class& width) {
  mpq_class x = (k + 1) / 2;
  mpq_class lo = k / x;
  while (x - lo > width) {
    x = (x + lo) / 2;
    lo = k / x;
  }
  return {lo, x};
}

// The first `count` iterates of the Newton map for sqrt(k) from x0.
inline std::vector<mpq_class> newton_orbit(const mpq_class& k, const mpq_class& x0,
                                           int count) {
  std::vector<mpq_class> orbit{x0};
  mpq_class x = x0;
  for (int i = 1; i < count; ++i) {
    x = (x + k / x) / 2;
    orbit.push_back(x);
  }
  return orbit;
}

// Exact decision of sqrt(p) <= K (sqrt(a) + sqrt(b)) for rationals
// p, a, b >= 0, K > 0, by squaring twice:
//   p <= K^2 (a + b) + 2 K^2 sqrt(ab)
//   <=> p - K^2 (a + b) <= 2 K^2 sqrt(ab)
//   <=> LHS <= 0, or LHS^2 <= 4 K^4 a b.
inline bool sqrt_le_k_sum_sqrt(const mpq_class& p, const mpq_class& k, const mpq_class& a,
                               const mpq_class& b) {
  mpq_class k2 = k * k;
  mpq_class lhs = p - k2 * (a + b);
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * k2 * k2 * a * b;
}

// Exact sqrt of a perfect-square rational; asserts exactness.
inline mpq_class sqrt_exact(const mpq_class& q) {
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_perfect_square(const mpq_class& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

struct Vec3 {
  mpq_class a, b, c;
};

inline Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x.b * y.c - x.c * y.b, x.c * y.a - x.a * y.c, x.a * y.b - x.b * y.a};
}

// For the ell_{1/2} composition N(v) = (sum sqrt|v_i|)^2: exact value when
// every |component| is a perfect rational square, else -1.
inline mpq_class ell_half_exact(const Vec3& v) {
  mpq_class s = 0;
  for (const mpq_class* comp : {&v.a, &v.b, &v.c}) {
    mpq_class a = abs(*comp);
    if (!is_perfect_square(a)) return mpq_class(-1);
    s += sqrt_exact(a);
  }
  return s * s;
}

// Brute-force grid search for the largest exact quasi-triangle ratio
//   N((x+y) cross z) / (N(x cross z) + N(y cross z))
// of the ell_{1/2} cross composition over integer grids, restricted to
// samples where every value is exactly computable. Establishes that the
// minimal quasi constant genuinely exceeds 1.
inline mpq_class cross3p_half_grid_ratio_max(int reach) {
  mpq_class best = 0;
  std::vector<Vec3> grid;
  for (int a = -reach; a <= reach; ++a)
    for (int b = -reach; b <= reach; ++b)
      for (int c = -reach; c <= reach; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        grid.push_back({mpq_class(a), mpq_class(b), mpq_class(c)});
      }
  for (const Vec3& x : grid)
    for (const Vec3& y : grid)
      for (const Vec3& z : grid) {
        Vec3 xz = cross(x, z), yz = cross(y, z);
        Vec3 xy = {x.a + y.a, x.b + y.b, x.c + y.c};
        Vec3 sz = cross(xy, z);
        mpq_class num = ell_half_exact(sz);
        mpq_class da = ell_half_exact(xz);
        mpq_class db = ell_half_exact(yz);
        if (num < 0 || da < 0 || db < 0) continue;
        mpq_class den = da + db;
        if (den == 0) continue;
        mpq_class ratio = num / den;
        if (ratio > best) best = ratio;
      }
  return best;
}

}  // namespace oracles
