#include "q2n/sampler.hpp"

namespace q2n {

void SamplerConfig::validate() const {
  if (trials == 0) throw ParameterError("sampler trials must be positive");
  if (denominator_bound == 0) throw ParameterError("denominator bound must be positive");
  if (denominator_bound > (1ull << 31)) throw ParameterError("denominator bound too large");
  if (range_lo > range_hi) throw ParameterError("sampler range is empty");
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw DomainError("below(0)");
  return next() % n;
}

namespace {

Rational sample_in_range(SplitMix64& rng, const Rational& lo, const Rational& hi,
                         std::uint64_t denom_bound) {
  std::uint64_t d = 1 + rng.below(denom_bound);
  Rational dq(static_cast<long>(d));
  Rational n_lo = (lo * dq).ceil();
  Rational n_hi = (hi * dq).floor();
  if (n_hi < n_lo) return Rational(0);  // no grid point at this denominator
  mpz_class span_z = (n_hi - n_lo).numerator() + 1;
  if (!span_z.fits_slong_p()) throw ParameterError("sampler range too wide");
  std::uint64_t pick = rng.below(static_cast<std::uint64_t>(span_z.get_si()));
  // n_lo + pick, exact
  Rational numerator = n_lo + Rational(static_cast<long>(pick));
  return numerator / dq;
}

}  // namespace

Rational sample_rational(SplitMix64& rng, const SamplerConfig& cfg) {
  return sample_in_range(rng, cfg.range_lo, cfg.range_hi, cfg.denominator_bound);
}

Rational sample_unit(SplitMix64& rng, const SamplerConfig& cfg) {
  return sample_in_range(rng, Rational(-1), Rational(1), cfg.denominator_bound);
}

VectorQ sample_vector(SplitMix64& rng, const SamplerConfig& cfg, int dim) {
  std::vector<Rational> comps;
  comps.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) comps.push_back(sample_rational(rng, cfg));
  return VectorQ(std::move(comps));
}

}  // namespace q2n
