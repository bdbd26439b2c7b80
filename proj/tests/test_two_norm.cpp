#include <doctest.h>

#include "oracles.hpp"
#include "q2n/sampler.hpp"
#include "q2n/two_norm.hpp"

using namespace q2n;

namespace {
const VectorQ kX{Rational(1), Rational(2), Rational(3)};
const VectorQ kY{Rational(4), Rational(5), Rational(6)};
}  // namespace

TEST_CASE("certified quasi constants by construction") {
  CHECK(TwoNormSpec::cross3().certified_k() == Rational(1));
  CHECK(TwoNormSpec::scaled(Rational(2), TwoNormSpec::cross3()).certified_k() == Rational(1));
  CHECK(TwoNormSpec::affine(Rational(1), Rational(2), TwoNormSpec::cross3()).certified_k() ==
        Rational(3));
  CHECK(TwoNormSpec::affine(Rational(1, 2), Rational(1, 2), TwoNormSpec::cross3()).certified_k() ==
        Rational(1));
  CHECK(TwoNormSpec::cross3p(Rational(1, 2)).certified_k() == Rational(2));
  CHECK(TwoNormSpec::cross3p(Rational(1, 3)).certified_k() == Rational(4));
  CHECK(TwoNormSpec::mutant("asym").certified_k() == Rational(1));
  CHECK_FALSE(TwoNormSpec::mutant("asym").conforming());
}

TEST_CASE("descriptor parameter validation") {
  CHECK_THROWS_AS(TwoNormSpec::affine(Rational(2, 5), Rational(1), TwoNormSpec::cross3()),
                  ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::affine(Rational(1), Rational(0), TwoNormSpec::cross3()),
                  ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::scaled(Rational(0), TwoNormSpec::cross3()), ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::scaled(Rational(-1), TwoNormSpec::cross3()), ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::cross3p(Rational(2, 5)), ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::cross3p(Rational(1)), ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::cross3p(Rational(-1, 2)), ParameterError);
  CHECK_THROWS_AS(TwoNormSpec::mutant("bogus"), ParameterError);
  // The a+b certificate presumes a plain-triangle base.
  CHECK_THROWS_AS(
      TwoNormSpec::affine(Rational(1), Rational(1), TwoNormSpec::cross3p(Rational(1, 2))),
      ParameterError);
}

TEST_CASE("norm_eval on the cross norm") {
  Rational eps = Rational::pow2(-20);
  TwoNormSpec cross = TwoNormSpec::cross3();

  Interval enc = norm_eval(cross, kX, kY, eps);
  CHECK(enc.width() <= eps);
  CHECK(enc.lo() * enc.lo() <= Rational(54));
  CHECK(enc.hi() * enc.hi() >= Rational(54));

  // Dependent pair: exactly zero.
  CHECK(norm_eval(cross, kX, kX * Rational(3), eps) == Interval::point(Rational(0)));
  CHECK(norm_is_zero_exact(cross, kX, kX * Rational(3)));
  CHECK_FALSE(norm_is_zero_exact(cross, kX, kY));
  CHECK_THROWS_AS(norm_eval(cross, kX, kY, Rational(0)), DomainError);
  CHECK_THROWS_AS(norm_eval(cross, kX, VectorQ{Rational(1), Rational(2)}, eps),
                  DimensionMismatch);
}

TEST_CASE("scaled and affine enclosures are exact endpoint multiples") {
  Rational eps = Rational::pow2(-18);
  TwoNormSpec cross = TwoNormSpec::cross3();
  TwoNormSpec twice = TwoNormSpec::scaled(Rational(2), cross);
  TwoNormSpec aff = TwoNormSpec::affine(Rational(1), Rational(2), cross);

  Interval base_half = norm_eval(cross, kX, kY, eps / Rational(2));
  Interval scaled_enc = norm_eval(twice, kX, kY, eps);
  CHECK(scaled_enc.lo() == base_half.lo() * Rational(2));
  CHECK(scaled_enc.hi() == base_half.hi() * Rational(2));
  // Contains 2 sqrt(54): (2 sqrt 54)^2 = 216.
  CHECK(scaled_enc.lo() * scaled_enc.lo() <= Rational(216));
  CHECK(scaled_enc.hi() * scaled_enc.hi() >= Rational(216));

  Interval base_third = norm_eval(cross, kX, kY, eps / Rational(3));
  Interval aff_enc = norm_eval(aff, kX, kY, eps);
  CHECK(aff_enc.lo() == base_third.lo() * Rational(3));
  CHECK(aff_enc.hi() == base_third.hi() * Rational(3));

  CHECK(norm_scale_factor(aff) == Rational(3));
  CHECK(norm_scale_factor(TwoNormSpec::scaled(Rational(5), twice)) == Rational(10));
}

TEST_CASE("cross3p evaluation") {
  Rational eps = Rational::pow2(-16);
  TwoNormSpec half = TwoNormSpec::cross3p(Rational(1, 2));

  // (1,1,0) x (0,0,1) = (1,-1,0); (sqrt 1 + sqrt 1)^2 = 4, exactly.
  VectorQ u{Rational(1), Rational(1), Rational(0)};
  VectorQ w{Rational(0), Rational(0), Rational(1)};
  CHECK(norm_eval(half, u, w, eps) == Interval::point(Rational(4)));

  // Generic pair: enclosure within width, strictly positive.
  Interval enc = norm_eval(half, kX, kY, eps);
  CHECK(enc.width() <= eps);
  CHECK(enc.lo().sgn() > 0);

  // Dependent pair collapses to zero.
  CHECK(norm_eval(half, kX, kX * Rational(-7), eps) == Interval::point(Rational(0)));

  // Exact squares only exist on the zero set.
  CHECK(norm_sq_exact(half, kX, kY) == std::nullopt);
  CHECK(norm_sq_exact(half, kX, kX * Rational(2)) == Rational(0));
}

TEST_CASE("symmetry of enclosures is bit-exact for every kind") {
  Rational eps = Rational::pow2(-12);
  std::vector<TwoNormSpec> specs = {
      TwoNormSpec::cross3(),
      TwoNormSpec::scaled(Rational(3, 2), TwoNormSpec::cross3()),
      TwoNormSpec::affine(Rational(1, 2), Rational(5, 2), TwoNormSpec::cross3()),
      TwoNormSpec::cross3p(Rational(1, 2)),
      TwoNormSpec::cross3p(Rational(1, 3)),
  };
  SplitMix64 rng(5);
  SamplerConfig cfg;
  for (const auto& spec : specs) {
    for (int i = 0; i < 40; ++i) {
      VectorQ x = sample_vector(rng, cfg, 3);
      VectorQ y = sample_vector(rng, cfg, 3);
      CHECK(norm_eval(spec, x, y, eps) == norm_eval(spec, y, x, eps));
    }
  }
}

TEST_CASE("homogeneity: exact on squares, overlapping enclosures otherwise") {
  Rational eps = Rational::pow2(-12);
  SplitMix64 rng(6);
  SamplerConfig cfg;
  std::vector<TwoNormSpec> sqrt_family = {
      TwoNormSpec::cross3(),
      TwoNormSpec::scaled(Rational(2), TwoNormSpec::cross3()),
      TwoNormSpec::affine(Rational(1), Rational(2), TwoNormSpec::cross3()),
  };
  for (const auto& spec : sqrt_family) {
    for (int i = 0; i < 60; ++i) {
      VectorQ x = sample_vector(rng, cfg, 3);
      VectorQ y = sample_vector(rng, cfg, 3);
      Rational alpha = sample_rational(rng, cfg);
      CHECK(*norm_sq_exact(spec, x * alpha, y) == alpha * alpha * *norm_sq_exact(spec, x, y));
    }
  }
  TwoNormSpec half = TwoNormSpec::cross3p(Rational(1, 2));
  for (int i = 0; i < 40; ++i) {
    VectorQ x = sample_vector(rng, cfg, 3);
    VectorQ y = sample_vector(rng, cfg, 3);
    Rational alpha = sample_rational(rng, cfg);
    Interval lhs = norm_eval(half, x * alpha, y, eps);
    Interval rhs = norm_eval(half, x, y, eps).scale_abs(alpha);
    CHECK(lhs.overlaps(rhs));
  }
}

TEST_CASE("plain triangle inequality holds exactly for the 2-norm family") {
  // Independent double-squaring decision of sqrt(p) <= sqrt(a) + sqrt(b).
  SplitMix64 rng(9);
  SamplerConfig cfg;
  for (int i = 0; i < 200; ++i) {
    VectorQ x = sample_vector(rng, cfg, 3);
    VectorQ y = sample_vector(rng, cfg, 3);
    VectorQ z = sample_vector(rng, cfg, 3);
    mpq_class p = norm_sq_cross(x + y, z).raw();
    mpq_class a = norm_sq_cross(x, z).raw();
    mpq_class b = norm_sq_cross(y, z).raw();
    CHECK(oracles::sqrt_le_k_sum_sqrt(p, mpq_class(1), a, b));
  }
}

TEST_CASE("mutant fixture is asymmetric but shares the cross zero set") {
  TwoNormSpec mut = TwoNormSpec::mutant("asym");
  VectorQ x{Rational(0), Rational(1), Rational(0)};
  VectorQ y{Rational(-1), Rational(0), Rational(0)};
  auto fwd = norm_sq_exact(mut, x, y);
  auto bwd = norm_sq_exact(mut, y, x);
  REQUIRE(fwd.has_value());
  REQUIRE(bwd.has_value());
  CHECK(*fwd != *bwd);
  CHECK(norm_is_zero_exact(mut, x, x * Rational(5)));
}

TEST_CASE("continuity caps vanish with delta") {
  std::vector<TwoNormSpec> specs = {
      TwoNormSpec::cross3(),
      TwoNormSpec::scaled(Rational(2), TwoNormSpec::cross3()),
      TwoNormSpec::cross3p(Rational(1, 2)),
      TwoNormSpec::cross3p(Rational(1, 3)),
  };
  for (const auto& spec : specs) {
    Rational r(8);
    // Nonincreasing along 16-fold refinements (absorbs enclosure slack) and
    // eventually below any threshold.
    for (int j = 0; j + 4 <= 64; j += 4) {
      Rational coarse = continuity_cap(spec, r, Rational::pow2(-j));
      Rational fine = continuity_cap(spec, r, Rational::pow2(-j - 4));
      CHECK(fine <= coarse);
      CHECK(fine.sgn() >= 0);
    }
    CHECK(continuity_cap(spec, r, Rational::pow2(-64)) <= Rational(1, 8));
  }
  CHECK(continuity_cap(TwoNormSpec::cross3(), Rational(8), Rational(1, 16)) == Rational(1));
  CHECK_THROWS_AS(continuity_cap(TwoNormSpec::mutant("asym"), Rational(1), Rational(1)),
                  DomainError);
}
