#pragma once

#include <cstdint>

#include "q2n/vector.hpp"

namespace q2n {

/// Configuration of the seeded sample stream used by the verifier. An
/// identical config yields a bit-identical stream on every platform: the
/// generator is a fixed 64-bit mixer and all range reduction is plain
/// integer arithmetic (no std::uniform_* involved).
struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 200;
  Rational range_lo = Rational(-10);
  Rational range_hi = Rational(10);
  std::uint64_t denominator_bound = 64;

  void validate() const;
};

/// splitmix64; the reference finalizer, fully deterministic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish value in [0, n); n > 0. Modulo reduction: the tiny bias is
  /// irrelevant for test-point generation and keeps the stream portable.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Rational with denominator <= cfg.denominator_bound, value within
/// [cfg.range_lo, cfg.range_hi].
Rational sample_rational(SplitMix64& rng, const SamplerConfig& cfg);

/// Rational in [-1, 1] with bounded denominator.
Rational sample_unit(SplitMix64& rng, const SamplerConfig& cfg);

VectorQ sample_vector(SplitMix64& rng, const SamplerConfig& cfg, int dim);

}  // namespace q2n
