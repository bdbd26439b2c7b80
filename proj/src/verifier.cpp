#include "q2n/verifier.hpp"

#include <algorithm>

namespace q2n {

namespace {

constexpr std::uint64_t kEstimateStreamSalt = 0xA3C59AC2E1F4D7B9ull;
constexpr size_t kMaxWitnessesPerAxiom = 8;

struct WitnessSink {
  std::vector<AxiomWitness>* out;
  size_t count_n1 = 0, count_n2 = 0, count_n3 = 0, count_n4 = 0;

  void add(AxiomWitness w) {
    size_t* c = nullptr;
    if (w.axiom == "2N1") c = &count_n1;
    else if (w.axiom == "2N2") c = &count_n2;
    else if (w.axiom == "2N3") c = &count_n3;
    else c = &count_n4;
    if (*c < kMaxWitnessesPerAxiom) {
      ++*c;
      out->push_back(std::move(w));
    }
  }
};

std::string interval_str(const Interval& iv) {
  return "[" + iv.lo().str() + ", " + iv.hi().str() + "]";
}

// Quasi-triangle check at one sample. Returns true when no violation is
// certified. A violation needs disjoint enclosures in the violating
// direction; overlap tightens the tolerance before settling for
// pass-at-tolerance, so enclosure slack can never fabricate a counterexample.
bool check_quasi_triangle(const TwoNormSpec& spec, const Rational& k, const VectorQ& x,
                          const VectorQ& y, const VectorQ& z, Rational eps, int refine_depth,
                          Interval* lhs_out, Interval* rhs_out) {
  for (int depth = 0;; ++depth) {
    Interval lhs = norm_eval(spec, x + y, z, eps);
    Interval sum = norm_eval(spec, x, z, eps) + norm_eval(spec, y, z, eps);
    Interval rhs = sum.scale_abs(k);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    if (lhs.strictly_above(rhs)) return false;   // certified violation
    if (lhs.hi() <= rhs.lo()) return true;       // certified non-violation
    if (depth >= refine_depth) return true;      // pass at tolerance
    eps = eps / Rational(2);
  }
}

}  // namespace

AxiomReport verify_axioms(const TwoNormSpec& spec, const SamplerConfig& cfg,
                          std::optional<Rational> claimed_k, const Rational& eps,
                          int refine_depth) {
  cfg.validate();
  if (eps.sgn() <= 0) throw DomainError("verify_axioms requires eps > 0");

  AxiomReport rep;
  rep.certified_k = spec.certified_k();
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  rep.eps = eps;
  rep.claimed_k = claimed_k;
  const Rational k_checked = claimed_k.value_or(spec.certified_k());
  const Rational eval_eps = eps * norm_scale_factor(spec);

  WitnessSink sink{&rep.witnesses};
  SplitMix64 rng(cfg.seed);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const VectorQ x = sample_vector(rng, cfg, spec.dim());
    const VectorQ y = sample_vector(rng, cfg, spec.dim());
    const VectorQ z = sample_vector(rng, cfg, spec.dim());
    const Rational alpha = sample_rational(rng, cfg);
    const Rational beta = sample_rational(rng, cfg);

    // 2N1, dependent direction: y = beta x is dependent by construction, so
    // the norm must vanish -- exactly on the zero set, and the enclosure must
    // pin zero at tolerance.
    {
      const VectorQ y_dep = x * beta;
      bool zero_ok = norm_is_zero_exact(spec, x, y_dep);
      Interval enc = norm_eval(spec, x, y_dep, eval_eps);
      if (!zero_ok || !enc.contains_zero()) {
        rep.n1 = AxiomStatus::Fail;
        AxiomWitness w{"2N1", trial, x, y_dep, std::nullopt, beta, {}};
        w.observed.emplace_back("enclosure", interval_str(enc));
        sink.add(std::move(w));
      }
    }

    // 2N1, independent direction: a sampled pair that is exactly independent
    // must evaluate certifiably above zero.
    if (!norm_is_zero_exact(spec, x, y)) {
      bool positive;
      if (auto sq = norm_sq_exact(spec, x, y)) {
        positive = sq->sgn() > 0;
      } else {
        positive = norm_eval(spec, x, y, eval_eps).lo().sgn() > 0;
      }
      if (!positive) {
        rep.n1 = AxiomStatus::Fail;
        AxiomWitness w{"2N1", trial, x, y, std::nullopt, std::nullopt, {}};
        w.observed.emplace_back("note", "independent pair evaluated to zero");
        sink.add(std::move(w));
      }
    }

    // 2N2 symmetry.
    {
      bool ok;
      std::string lhs_s, rhs_s;
      if (auto sq_xy = norm_sq_exact(spec, x, y)) {
        Rational sq_yx = *norm_sq_exact(spec, y, x);
        ok = *sq_xy == sq_yx;
        lhs_s = sq_xy->str();
        rhs_s = sq_yx.str();
      } else {
        Interval e_xy = norm_eval(spec, x, y, eval_eps);
        Interval e_yx = norm_eval(spec, y, x, eval_eps);
        ok = e_xy == e_yx;
        lhs_s = interval_str(e_xy);
        rhs_s = interval_str(e_yx);
      }
      if (!ok) {
        rep.n2 = AxiomStatus::Fail;
        AxiomWitness w{"2N2", trial, x, y, std::nullopt, std::nullopt, {}};
        w.observed.emplace_back("norm_sq(x,y)", lhs_s);
        w.observed.emplace_back("norm_sq(y,x)", rhs_s);
        sink.add(std::move(w));
      }
    }

    // 2N3 homogeneity.
    {
      bool ok = true;
      std::string lhs_s, rhs_s;
      if (auto sq = norm_sq_exact(spec, x, y)) {
        Rational lhs = *norm_sq_exact(spec, x * alpha, y);
        Rational rhs = alpha * alpha * *sq;
        ok = lhs == rhs;
        lhs_s = lhs.str();
        rhs_s = rhs.str();
      } else {
        Interval lhs = norm_eval(spec, x * alpha, y, eval_eps);
        Interval rhs = norm_eval(spec, x, y, eval_eps).scale_abs(alpha);
        ok = lhs.overlaps(rhs);  // equal true values can never be disjoint
        lhs_s = interval_str(lhs);
        rhs_s = interval_str(rhs);
      }
      if (!ok) {
        rep.n3 = AxiomStatus::Fail;
        AxiomWitness w{"2N3", trial, x, y, std::nullopt, alpha, {}};
        w.observed.emplace_back("norm_sq(alpha x, y)", lhs_s);
        w.observed.emplace_back("alpha^2 norm_sq(x, y)", rhs_s);
        sink.add(std::move(w));
      }
    }

    // 2N4*.
    {
      Interval lhs = Interval::point(Rational(0));
      Interval rhs = Interval::point(Rational(0));
      if (!check_quasi_triangle(spec, k_checked, x, y, z, eval_eps, refine_depth, &lhs, &rhs)) {
        rep.n4star = AxiomStatus::Fail;
        AxiomWitness w{"2N4star", trial, x, y, z, std::nullopt, {}};
        w.observed.emplace_back("K", k_checked.str());
        w.observed.emplace_back("lhs", interval_str(lhs));
        w.observed.emplace_back("K*(sum)", interval_str(rhs));
        sink.add(std::move(w));
      }
    }
  }

  rep.estimated_k = estimate_k(spec, cfg);
  return rep;
}

KEstimate estimate_k_detailed(const TwoNormSpec& spec, const SamplerConfig& cfg) {
  cfg.validate();
  KEstimate est;
  est.ratio_bounds.reserve(cfg.trials);

  const Rational eval_eps = Rational::pow2(-20) * norm_scale_factor(spec);
  SplitMix64 rng(cfg.seed ^ kEstimateStreamSalt);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const VectorQ x = sample_vector(rng, cfg, spec.dim());
    const VectorQ y = sample_vector(rng, cfg, spec.dim());
    const VectorQ z = sample_vector(rng, cfg, spec.dim());

    Interval num = norm_eval(spec, x + y, z, eval_eps);
    Interval den = norm_eval(spec, x, z, eval_eps) + norm_eval(spec, y, z, eval_eps);
    if (den.lo().sgn() <= 0) {
      ++est.samples_skipped;
      continue;
    }
    Rational ratio_lb = num.lo() / den.hi();
    est.ratio_bounds.push_back(ratio_lb);
    ++est.samples_used;
    if (ratio_lb > est.best_ratio) {
      est.best_ratio = ratio_lb;
      AxiomWitness w{"2N4star", trial, x, y, z, std::nullopt, {}};
      w.observed.emplace_back("ratio_lower_bound", ratio_lb.str());
      w.observed.emplace_back("numerator", interval_str(num));
      w.observed.emplace_back("denominator", interval_str(den));
      est.best_sample = std::move(w);
    }
  }

  if (est.samples_used == 0) {
    throw InconclusiveSampling("every sampled denominator enclosure contained zero");
  }
  est.value = max(Rational(1), est.best_ratio);
  return est;
}

Rational estimate_k(const TwoNormSpec& spec, const SamplerConfig& cfg) {
  return estimate_k_detailed(spec, cfg).value;
}

Rational probe_uniform_continuity(const TwoNormSpec& spec, const Rational& radius,
                                  const Rational& eps, const SamplerConfig& cfg) {
  cfg.validate();
  if (radius.sgn() <= 0 || eps.sgn() <= 0) {
    throw DomainError("probe_uniform_continuity requires radius > 0 and eps > 0");
  }

  // Points in the box have Euclidean length <= sqrt(3) R <= 2R.
  const Rational reach = Rational(2) * radius;
  Rational delta;
  if (spec.kind() == NormKind::Cross3 || spec.kind() == NormKind::Scaled ||
      spec.kind() == NormKind::Affine) {
    // continuity_cap is 2 L reach delta = 4 L R delta; invert directly.
    delta = eps / (Rational(4) * norm_scale_factor(spec) * radius);
  } else {
    delta = radius;
    int guard = 0;
    while (continuity_cap(spec, reach, delta) >= eps) {
      delta = delta / Rational(2);
      if (++guard > 4096) throw DomainError("no positive delta found");
    }
  }

  // Seeded validation. The analytic bound guarantees success; a certified
  // violation here would mean the bound itself is wrong.
  SamplerConfig box = cfg;
  box.range_lo = -radius;
  box.range_hi = radius;
  SplitMix64 rng(cfg.seed);
  const Rational enc_eps = eps / Rational(8);
  const Rational half_delta = delta / Rational(2);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    VectorQ a = sample_vector(rng, box, spec.dim());
    VectorQ b = sample_vector(rng, box, spec.dim());
    VectorQ a2 = a;
    VectorQ b2 = b;
    if (trial % 8 != 0) {  // keep some exactly-identical pairs in the mix
      std::vector<Rational> pa, pb;
      for (int i = 0; i < spec.dim(); ++i) pa.push_back(sample_unit(rng, box) * half_delta);
      for (int i = 0; i < spec.dim(); ++i) pb.push_back(sample_unit(rng, box) * half_delta);
      auto clamp = [&](const Rational& v) { return min(max(v, -radius), radius); };
      std::vector<Rational> ca, cb;
      for (int i = 0; i < spec.dim(); ++i) ca.push_back(clamp(a[i] + pa[static_cast<size_t>(i)]));
      for (int i = 0; i < spec.dim(); ++i) cb.push_back(clamp(b[i] + pb[static_cast<size_t>(i)]));
      a2 = VectorQ(std::move(ca));
      b2 = VectorQ(std::move(cb));
    }
    Interval e1 = norm_eval(spec, a, b, enc_eps);
    Interval e2 = norm_eval(spec, a2, b2, enc_eps);
    bool certified = (e1.hi() - e2.lo() < eps) && (e2.hi() - e1.lo() < eps);
    if (!certified) {
      throw DomainError("uniform continuity validation failed; analytic bound defective");
    }
  }
  return delta;
}

}  // namespace q2n
