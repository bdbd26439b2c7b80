#include "q2n/sequence.hpp"

#include <algorithm>

namespace q2n {

namespace detail {

WireForm SeqNode::wire_form() const {
  throw DomainError("sequence kind '" + kind_name() + "' has no wire form");
}

namespace {

constexpr Index kModulusCap = Index(1) << 40;

[[noreturn]] void modulus_overflow(const std::string& kind) {
  throw DomainError("convergence modulus of " + kind + " exceeded the supported range");
}

class ConstNode final : public SeqNode {
 public:
  explicit ConstNode(VectorQ x) : x_(std::move(x)) {}
  VectorQ term(Index) const override { return x_; }
  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    return 0;
  }
  int dim() const override { return x_.dim(); }
  std::string kind_name() const override { return "const"; }
  std::optional<VectorQ> constant_value() const override { return x_; }
  WireForm wire_form() const override { return WireForm{"const", {}, {{"x", x_}}, {}}; }
  const VectorQ& value() const { return x_; }

 private:
  VectorQ x_;
};

class GeometricNode final : public SeqNode {
 public:
  GeometricNode(VectorQ x, VectorQ d, Rational r)
      : x_(std::move(x)), d_(std::move(d)), r_(std::move(r)) {
    if (x_.dim() != d_.dim()) throw DimensionMismatch("geometric: x and d dimensions differ");
    if (r_.is_zero() || r_.abs() >= Rational(1)) {
      throw ParameterError("geometric ratio must satisfy 0 < |r| < 1");
    }
  }

  VectorQ term(Index n) const override {
    return x_ + d_ * r_.pow_int(static_cast<long>(n));
  }

  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    if (d_.is_zero()) return 0;
    // First N with (2 |r|^N / (1 - |r|))^2 |d|^2 <= eps^2; exact walk.
    const Rational dsq = d_.norm_sq();
    const Rational target = eps * eps;
    const Rational rabs = r_.abs();
    Rational factor = Rational(2) / (Rational(1) - rabs);  // N = 0 value
    Index n = 0;
    while (factor * factor * dsq > target) {
      factor *= rabs;
      if (++n > kModulusCap) modulus_overflow(kind_name());
    }
    return n;
  }

  int dim() const override { return x_.dim(); }
  std::string kind_name() const override { return "geometric"; }
  std::optional<VectorQ> constant_value() const override {
    if (d_.is_zero()) return x_;
    return std::nullopt;
  }
  WireForm wire_form() const override {
    return WireForm{"geometric", {{"r", r_.str()}}, {{"x", x_}, {"d", d_}}, {}};
  }
  const VectorQ& x() const { return x_; }
  const VectorQ& d() const { return d_; }
  const Rational& r() const { return r_; }

 private:
  VectorQ x_, d_;
  Rational r_;
};

class NewtonSqrtNode final : public SeqNode {
 public:
  NewtonSqrtNode(Rational k, VectorQ dir, Rational x0)
      : k_(std::move(k)), dir_(std::move(dir)), x0_(std::move(x0)) {
    if (k_.sgn() <= 0) throw ParameterError("newton_sqrt radicand must be positive");
    if (k_.is_perfect_square()) {
      throw ParameterError("newton_sqrt radicand must not be a rational square");
    }
    if (x0_.sgn() <= 0) throw ParameterError("newton_sqrt seed must be positive");
    if (dir_.is_zero()) throw ParameterError("newton_sqrt direction must be nonzero");
  }

  VectorQ term(Index n) const override { return dir_ * iterate(n); }

  VectorQ term_approx(Index n, const Rational& tol) const override {
    // Iterates past modulus(tol) stay within the bracket of width tol, so
    // the iterate at the modulus stands in for any later one.
    Index cap = modulus(tol);
    return term(n < cap ? n : cap);
  }

  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    // For n >= 1 all later iterates lie in [k/u_n, u_n]; stop when the
    // bracket, scaled by |dir|, is below eps (exact squared comparison).
    const Rational dir_sq = dir_.norm_sq();
    const Rational target = eps * eps;
    Rational u = x0_;
    for (Index n = 1;; ++n) {
      u = (u + k_ / u) / Rational(2);
      Rational w = u - k_ / u;
      if (w * w * dir_sq <= target) return n;
      if (n > 512) modulus_overflow(kind_name());
    }
  }

  int dim() const override { return dir_.dim(); }
  std::string kind_name() const override { return "newton_sqrt"; }
  WireForm wire_form() const override {
    return WireForm{"newton_sqrt", {{"k", k_.str()}, {"x0", x0_.str()}}, {{"dir", dir_}}, {}};
  }
  const Rational& k() const { return k_; }
  const VectorQ& dir() const { return dir_; }
  const Rational& x0() const { return x0_; }

  Rational iterate(Index n) const {
    if (n > 512) throw DomainError("newton_sqrt term index too large for exact evaluation");
    Rational u = x0_;
    for (Index i = 0; i < n; ++i) u = (u + k_ / u) / Rational(2);
    return u;
  }

 private:
  Rational k_;
  VectorQ dir_;
  Rational x0_;
};

class CombineNode final : public SeqNode {
 public:
  enum class Op { Sum, Diff };

  CombineNode(Op op, SeqSpec s, SeqSpec t, Rational quasi_k)
      : op_(op), s_(std::move(s)), t_(std::move(t)), k_(std::move(quasi_k)) {
    if (s_.dim() != t_.dim()) throw DimensionMismatch("sequence combination: dimensions differ");
    if (k_ < Rational(1)) throw ParameterError("quasi constant must be >= 1");
  }

  VectorQ term(Index n) const override {
    return op_ == Op::Sum ? s_.term(n) + t_.term(n) : s_.term(n) - t_.term(n);
  }

  VectorQ term_approx(Index n, const Rational& tol) const override {
    Rational half = tol / Rational(2);
    VectorQ a = s_.term_approx(n, half);
    VectorQ b = t_.term_approx(n, half);
    return op_ == Op::Sum ? a + b : a - b;
  }

  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    Rational child_eps = eps / (Rational(2) * k_);
    Index a = s_.modulus(child_eps);
    Index b = t_.modulus(child_eps);
    return a > b ? a : b;
  }

  int dim() const override { return s_.dim(); }
  std::string kind_name() const override { return op_ == Op::Sum ? "sum" : "diff"; }
  std::optional<VectorQ> constant_value() const override {
    auto a = s_.constant_value();
    auto b = t_.constant_value();
    if (a && b) return op_ == Op::Sum ? *a + *b : *a - *b;
    return std::nullopt;
  }
  bool serializable() const override {
    return s_.node().serializable() && t_.node().serializable();
  }
  WireForm wire_form() const override {
    return WireForm{kind_name(), {{"quasi_K", k_.str()}}, {}, {{"s", s_}, {"t", t_}}};
  }
  const SeqSpec& lhs() const { return s_; }
  const SeqSpec& rhs() const { return t_; }
  Op op() const { return op_; }

 private:
  Op op_;
  SeqSpec s_, t_;
  Rational k_;
};

class ScaleNode final : public SeqNode {
 public:
  ScaleNode(Rational alpha, SeqSpec s) : alpha_(std::move(alpha)), s_(std::move(s)) {}

  VectorQ term(Index n) const override { return s_.term(n) * alpha_; }

  VectorQ term_approx(Index n, const Rational& tol) const override {
    if (alpha_.is_zero()) return VectorQ::zero(s_.dim());
    return s_.term_approx(n, tol / alpha_.abs()) * alpha_;
  }

  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    if (alpha_.is_zero()) return 0;
    return s_.modulus(eps / alpha_.abs());
  }

  int dim() const override { return s_.dim(); }
  std::string kind_name() const override { return "scale"; }
  std::optional<VectorQ> constant_value() const override {
    if (alpha_.is_zero()) return VectorQ::zero(s_.dim());
    if (auto v = s_.constant_value()) return *v * alpha_;
    return std::nullopt;
  }
  bool serializable() const override { return s_.node().serializable(); }
  WireForm wire_form() const override {
    return WireForm{"scale", {{"alpha", alpha_.str()}}, {}, {{"s", s_}}};
  }
  const SeqSpec& inner() const { return s_; }
  const Rational& alpha() const { return alpha_; }

 private:
  Rational alpha_;
  SeqSpec s_;
};

class DynamicNode final : public SeqNode {
 public:
  DynamicNode(std::function<VectorQ(Index)> term, std::function<Index(const Rational&)> modulus,
              int dim, std::string label)
      : term_(std::move(term)), modulus_(std::move(modulus)), dim_(dim), label_(std::move(label)) {
    if (dim_ <= 0) throw DimensionMismatch("dynamic sequence dimension must be positive");
    if (!term_ || !modulus_) throw ParameterError("dynamic sequence needs term and modulus rules");
  }

  VectorQ term(Index n) const override {
    VectorQ v = term_(n);
    if (v.dim() != dim_) throw DimensionMismatch("dynamic sequence produced a wrong-dimension term");
    return v;
  }
  Index modulus(const Rational& eps) const override {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    return modulus_(eps);
  }
  int dim() const override { return dim_; }
  std::string kind_name() const override { return label_; }
  bool serializable() const override { return false; }

 private:
  std::function<VectorQ(Index)> term_;
  std::function<Index(const Rational&)> modulus_;
  int dim_;
  std::string label_;
};

}  // namespace
}  // namespace detail

SeqSpec SeqSpec::constant(VectorQ x) {
  return SeqSpec(std::make_shared<detail::ConstNode>(std::move(x)));
}
SeqSpec SeqSpec::geometric(VectorQ x, VectorQ d, const Rational& r) {
  return SeqSpec(std::make_shared<detail::GeometricNode>(std::move(x), std::move(d), r));
}
SeqSpec SeqSpec::newton_sqrt(const Rational& k, VectorQ dir, const Rational& x0) {
  return SeqSpec(std::make_shared<detail::NewtonSqrtNode>(k, std::move(dir), x0));
}
SeqSpec SeqSpec::sum(SeqSpec s, SeqSpec t, const Rational& quasi_k) {
  return SeqSpec(std::make_shared<detail::CombineNode>(detail::CombineNode::Op::Sum,
                                                       std::move(s), std::move(t), quasi_k));
}
SeqSpec SeqSpec::diff(SeqSpec s, SeqSpec t, const Rational& quasi_k) {
  return SeqSpec(std::make_shared<detail::CombineNode>(detail::CombineNode::Op::Diff,
                                                       std::move(s), std::move(t), quasi_k));
}
SeqSpec SeqSpec::scale(const Rational& alpha, SeqSpec s) {
  return SeqSpec(std::make_shared<detail::ScaleNode>(alpha, std::move(s)));
}
SeqSpec SeqSpec::dynamic(std::function<VectorQ(Index)> term,
                         std::function<Index(const Rational&)> modulus, int dim,
                         std::string label) {
  return SeqSpec(std::make_shared<detail::DynamicNode>(std::move(term), std::move(modulus), dim,
                                                       std::move(label)));
}

VectorQ SeqSpec::term(Index n) const { return node_->term(n); }
VectorQ SeqSpec::term_approx(Index n, const Rational& tol) const {
  if (tol.sgn() <= 0) throw DomainError("term_approx requires tol > 0");
  return node_->term_approx(n, tol);
}
Index SeqSpec::modulus(const Rational& eps) const { return node_->modulus(eps); }
int SeqSpec::dim() const { return node_->dim(); }
std::string SeqSpec::kind_name() const { return node_->kind_name(); }
std::optional<VectorQ> SeqSpec::constant_value() const { return node_->constant_value(); }
bool SeqSpec::serializable() const { return node_->serializable(); }

EquivVerdict EquivVerdict::equivalent(EquivCertificate cert) {
  EquivVerdict v;
  v.status_ = Status::Equivalent;
  v.payload_ = std::move(cert);
  return v;
}
EquivVerdict EquivVerdict::distinct(DistinctWitness w) {
  EquivVerdict v;
  v.status_ = Status::Distinct;
  v.payload_ = std::move(w);
  return v;
}
EquivVerdict EquivVerdict::unknown(UnknownDiagnostics diag) {
  EquivVerdict v;
  v.status_ = Status::Unknown;
  v.payload_ = std::move(diag);
  return v;
}

const EquivCertificate& EquivVerdict::certificate() const {
  if (status_ != Status::Equivalent) throw DomainError("verdict carries no certificate");
  return std::get<EquivCertificate>(payload_);
}
const DistinctWitness& EquivVerdict::witness() const {
  if (status_ != Status::Distinct) throw DomainError("verdict carries no witness");
  return std::get<DistinctWitness>(payload_);
}
const UnknownDiagnostics& EquivVerdict::diagnostics() const {
  if (status_ != Status::Unknown) throw DomainError("verdict carries no diagnostics");
  return std::get<UnknownDiagnostics>(payload_);
}
std::string EquivVerdict::status_name() const {
  switch (status_) {
    case Status::Equivalent: return "equivalent_certified";
    case Status::Distinct: return "distinct_certified";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

namespace detail {

namespace {

// Rational upper bound on the Euclidean length of v.
Rational euclid_upper(const VectorQ& v) {
  return interval_sqrt(v.norm_sq(), Rational(1, 4)).hi();
}

}  // namespace

LimitNormDetail limit_norm_detail(const TwoNormSpec& spec, const SeqSpec& s,
                                  const SeqSpec& t, const Rational& eps) {
  if (eps.sgn() <= 0) throw DomainError("limit_norm requires eps > 0");
  if (s.dim() != spec.dim() || t.dim() != spec.dim()) {
    throw DimensionMismatch("limit_norm: sequence dimension does not match the space");
  }

  auto cs = s.constant_value();
  auto ct = t.constant_value();
  if (cs && ct) {
    // Exactly constant sequences: the limit is the plain norm. Evaluating it
    // directly also makes the constant-class embedding an exact isometry.
    return LimitNormDetail{norm_eval(spec, *cs, *ct, eps), 0, Rational(0)};
  }
  if (spec.kind() == NormKind::Mutant) {
    throw DomainError("mutant norms are not uniformly continuous; limit norms are undefined");
  }

  // Certified bound on every tail term and its approximation: beyond
  // modulus(1) the terms move by at most 1 from the anchor, which is itself
  // evaluated to within 1.
  Index n1 = std::max(s.modulus(Rational(1)), t.modulus(Rational(1)));
  Rational radius = max(euclid_upper(s.term_approx(n1, Rational(1))),
                        euclid_upper(t.term_approx(n1, Rational(1)))) +
                    Rational(3);

  // Largest dyadic delta whose variation cap fits in eps/8. Terms are
  // evaluated to within delta/2 at an index past modulus(delta/2), so every
  // true tail value sits within delta (Euclidean) of the evaluated pair and
  // the norm differs by at most the cap.
  Rational delta(1);
  Rational cap = continuity_cap(spec, radius, delta);
  const Rational eighth = eps / Rational(8);
  int guard = 0;
  while (cap > eighth) {
    delta = delta / Rational(2);
    cap = continuity_cap(spec, radius, delta);
    if (++guard > 4096) throw DomainError("limit_norm: no usable continuity bound");
  }

  const Rational half_delta = delta / Rational(2);
  Index n_star = std::max(n1, std::max(s.modulus(half_delta), t.modulus(half_delta)));
  Interval core = norm_eval(spec, s.term_approx(n_star, half_delta),
                            t.term_approx(n_star, half_delta), eps / Rational(4));
  Interval widened(core.lo() - cap, core.hi() + cap);
  return LimitNormDetail{widened.clamp_nonneg(), n_star, delta};
}

}  // namespace detail

Interval limit_norm(const TwoNormSpec& spec, const SeqSpec& s, const SeqSpec& t,
                    const Rational& eps) {
  return detail::limit_norm_detail(spec, s, t, eps).enclosure;
}

EquivVerdict are_equivalent(const TwoNormSpec& spec, const SeqSpec& s, const SeqSpec& t,
                            int budget) {
  if (budget <= 0) throw ParameterError("equivalence budget must be positive");
  if (s.dim() != t.dim()) throw DimensionMismatch("are_equivalent: dimensions differ");

  SeqSpec d = SeqSpec::diff(s, t, spec.certified_k());

  // Refinement ladder 1, 2, 4, ... capped by the budget; distinctness can be
  // certified early at coarse (cheap) tolerances.
  std::vector<int> levels;
  for (int l = 1; l < budget; l *= 2) levels.push_back(l);
  levels.push_back(budget);

  std::vector<std::pair<VectorQ, Interval>> last;
  for (int level : levels) {
    last.clear();
    Rational tol = Rational::pow2(-level);
    for (int i = 0; i < spec.dim(); ++i) {
      VectorQ z = VectorQ::basis(spec.dim(), i);
      auto det = detail::limit_norm_detail(spec, d, SeqSpec::constant(z), tol);
      if (det.enclosure.lo().sgn() > 0) {
        // The limit itself is >= lo, and every term past the index used
        // stays >= lo by the same tail bound.
        return EquivVerdict::distinct(DistinctWitness{det.index_used, z, det.enclosure.lo()});
      }
      last.emplace_back(z, det.enclosure);
    }
  }

  Rational floor_tol = Rational::pow2(-budget);
  bool all_small = true;
  for (const auto& [z, enc] : last) {
    if (enc.hi() > floor_tol) {
      all_small = false;
      break;
    }
  }
  if (all_small) return EquivVerdict::equivalent(EquivCertificate{d, budget});
  return EquivVerdict::unknown(UnknownDiagnostics{budget, std::move(last)});
}

}  // namespace q2n
