#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q2n/sampler.hpp"
#include "q2n/two_norm.hpp"

namespace q2n {

enum class AxiomStatus { Pass, Fail };

/// A concrete sample at which an axiom check failed. Witnesses re-check as
/// violations under exact arithmetic: either an exact inequality of squared
/// rationals, or a pair of disjoint enclosures whose gap survives refinement.
struct AxiomWitness {
  std::string axiom;  // "2N1" | "2N2" | "2N3" | "2N4star"
  std::uint64_t trial = 0;
  std::optional<VectorQ> x, y, z;
  std::optional<Rational> alpha;
  std::vector<std::pair<std::string, std::string>> observed;  // label -> value
};

struct AxiomReport {
  AxiomStatus n1 = AxiomStatus::Pass;
  AxiomStatus n2 = AxiomStatus::Pass;
  AxiomStatus n3 = AxiomStatus::Pass;
  AxiomStatus n4star = AxiomStatus::Pass;
  std::vector<AxiomWitness> witnesses;

  Rational estimated_k = Rational(1);  // sampled lower bound, clamped at 1
  Rational certified_k = Rational(1);
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  Rational eps = Rational(1);
  std::optional<Rational> claimed_k;

  bool all_pass() const {
    return n1 == AxiomStatus::Pass && n2 == AxiomStatus::Pass && n3 == AxiomStatus::Pass &&
           n4star == AxiomStatus::Pass;
  }
};

/// Detailed result of the quasi-constant estimation.
struct KEstimate {
  /// max(1, best certified ratio lower bound); the minimal admissible quasi
  /// constant is >= this value.
  Rational value = Rational(1);
  /// Best per-sample lower bound before clamping (may be < 1).
  Rational best_ratio = Rational(0);
  std::optional<AxiomWitness> best_sample;
  std::uint64_t samples_used = 0;
  std::uint64_t samples_skipped = 0;
  /// One certified ratio lower bound per non-degenerate sample, in trial
  /// order. Each is a sound lower bound on ||x+y,z|| / (||x,z|| + ||y,z||).
  std::vector<Rational> ratio_bounds;
};

/// Seeded property check of the four axioms against `spec`:
///   2N1  dependent pairs (built as y = beta x) evaluate to an enclosure
///        containing zero, exactly zero on squares; sampled independent pairs
///        evaluate certifiably above zero
///   2N2  swap symmetry, exact on squares where available, bit-identical
///        enclosures otherwise
///   2N3  |alpha|-homogeneity, exact on squares where available, enclosure
///        overlap (refined before failing) otherwise
///   2N4* quasi triangle with K = claimed_k (default: the certificate);
///        a violation is declared only from disjoint enclosures, after
///        halving the tolerance up to `refine_depth` times
/// A non-conforming spec yields fail verdicts with witnesses, never an error.
/// Identical (spec, cfg) produce identical reports.
AxiomReport verify_axioms(const TwoNormSpec& spec, const SamplerConfig& cfg,
                          std::optional<Rational> claimed_k = std::nullopt,
                          const Rational& eps = Rational::pow2(-20), int refine_depth = 8);

/// Sampled lower bound on the minimal quasi constant: the maximum over
/// samples of lo(||x+y,z||) / hi(||x,z|| + ||y,z||), skipping samples whose
/// denominator enclosure contains zero, clamped below at 1 (every quasi
/// constant is >= 1 by definition). Enclosure tolerances are scaled by the
/// norm's exact positive scale factor, so the per-sample bounds are exactly
/// invariant under Scaled/Affine wrapping of the same base norm.
/// Throws InconclusiveSampling when every sample is degenerate.
KEstimate estimate_k_detailed(const TwoNormSpec& spec, const SamplerConfig& cfg);
Rational estimate_k(const TwoNormSpec& spec, const SamplerConfig& cfg);

/// A delta > 0 such that |a - a'|, |b - b'| <= delta (Euclidean) with all four
/// points in the componentwise box [-radius, radius] forces
/// | ||a,b|| - ||a',b'|| | < eps. Derived analytically from continuity_cap,
/// then validated on cfg.trials seeded sample quadruples (a violation of the
/// analytic bound would be a library defect and throws). For the single-sqrt
/// family the returned value is exactly eps / (4 L radius) with L the norm's
/// scale factor.
Rational probe_uniform_continuity(const TwoNormSpec& spec, const Rational& radius,
                                  const Rational& eps, const SamplerConfig& cfg);

}  // namespace q2n
