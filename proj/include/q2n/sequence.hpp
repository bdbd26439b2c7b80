#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "q2n/two_norm.hpp"

namespace q2n {

using Index = std::uint64_t;

namespace detail {
class SeqNode;
}

/// A Cauchy sequence of rational vectors, given as a pure index rule plus an
/// analytic convergence modulus. The modulus contract is Euclidean:
///
///   for all n, m >= modulus(eps):  |term(n) - term(m)|_2 <= eps,
///
/// certified by exact squared comparisons. Euclidean control dominates the
/// pairing against any test vector z, since ||d, z|| <= L |d| |z| with the
/// norm's Euclidean factor L; in particular for the plain cross norm it gives
/// ||term(n) - term(m), e_i|| <= eps for every canonical basis vector, and
/// sum_i ||d, e_i||^2 = 2 |d|^2 makes basis control equivalent to Euclidean
/// control (a library self-test pins that identity).
///
/// Built-in kinds:
///   constant(x)                x, x, x, ...                      modulus 0
///   geometric(x, d, r)         x + r^n d, 0 < |r| < 1; modulus is the first N
///                              with (2 |r|^N / (1-|r|))^2 |d|^2 <= eps^2
///   newton_sqrt(k, dir, x0)    u_n dir with u_0 = x0 > 0 and
///                              u_{n+1} = (u_n + k/u_n)/2, k > 0 not a rational
///                              square. For n >= 1, AM-GM gives
///                              k/u_n <= sqrt(k) <= u_n, and u_n decreases, so
///                              every later term lies in the bracket
///                              [k/u_n, u_n]; the modulus walks n upward until
///                              the bracket width (times |dir|) drops below
///                              eps, all compared on exact squares.
///   sum/diff(s, t, K)          termwise; modulus eps -> max over children at
///                              eps/(2K), with K >= 1 the ambient space's
///                              certified quasi constant
///   scale(alpha, s)            termwise; modulus eps -> s.modulus(eps/|alpha|)
///                              (alpha = 0 collapses to the zero sequence)
///
/// Values are immutable and cheap to copy (shared nodes); all evaluation is
/// pure, so unrestricted concurrent use is safe.
class SeqSpec {
 public:
  static SeqSpec constant(VectorQ x);
  static SeqSpec geometric(VectorQ x, VectorQ d, const Rational& r);
  static SeqSpec newton_sqrt(const Rational& k, VectorQ dir, const Rational& x0);
  static SeqSpec sum(SeqSpec s, SeqSpec t, const Rational& quasi_k = Rational(1));
  static SeqSpec diff(SeqSpec s, SeqSpec t, const Rational& quasi_k = Rational(1));
  static SeqSpec scale(const Rational& alpha, SeqSpec s);

  /// Sequence defined by an arbitrary rule with a caller-supplied modulus.
  /// Used internally by the completion's limit construction; not part of the
  /// wire grammar (serialization refuses it).
  static SeqSpec dynamic(std::function<VectorQ(Index)> term,
                         std::function<Index(const Rational&)> modulus, int dim,
                         std::string label);

  VectorQ term(Index n) const;

  /// A vector within Euclidean distance `tol` of term(n). Exact for most
  /// kinds; the Newton orbit clamps the iterate index to its own modulus for
  /// `tol`, since every later iterate stays inside that bracket. Limit-norm
  /// evaluation goes through this hook, which keeps deep tail indices
  /// affordable: the exact iterate at index 40 has ~2^40 digits, while the
  /// clamped one is as small as the tolerance demands.
  VectorQ term_approx(Index n, const Rational& tol) const;

  Index modulus(const Rational& eps) const;
  int dim() const;
  std::string kind_name() const;

  /// The common value when every term is exactly the same vector
  /// (constant() nodes, algebra over them, zero scalings); nullopt otherwise.
  std::optional<VectorQ> constant_value() const;

  bool serializable() const;

  const detail::SeqNode& node() const { return *node_; }

 private:
  explicit SeqSpec(std::shared_ptr<const detail::SeqNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::SeqNode> node_;
};

/// Certificate that two sequences were found equivalent: their difference
/// sequence, from which a joint convergence-to-zero modulus is derived, and
/// the refinement budget at which the difference norm was enclosed.
struct EquivCertificate {
  SeqSpec difference;
  int budget;

  /// N such that |s_n - t_n|_2 <= eps for all n >= N. The certificate pins
  /// the difference's norm limit at or below 2^-budget, so the bound is valid
  /// for eps >= 2^(2-budget) when the ambient norm dominates the Euclidean
  /// metric (scale factor >= 1; true for the cross norm and every built-in
  /// fixture). For ambient norms scaled below 1 the floor grows by the
  /// inverse scale.
  Index joint_modulus(const Rational& eps) const {
    return difference.modulus(eps / Rational(2));
  }
};

/// Witness that two sequences are certifiably distinct: beyond `index`, the
/// norm of the difference against test vector `z` stays >= `separation` > 0.
struct DistinctWitness {
  Index index;
  VectorQ z;
  Rational separation;
};

/// Diagnostics of an exhausted refinement budget.
struct UnknownDiagnostics {
  int budget;
  std::vector<std::pair<VectorQ, Interval>> final_enclosures;
};

/// Three-valued verdict of the equivalence check; equivalence of arbitrary
/// Cauchy sequences is not decidable, so "unknown" is an honest outcome.
class EquivVerdict {
 public:
  enum class Status { Equivalent, Distinct, Unknown };

  static EquivVerdict equivalent(EquivCertificate cert);
  static EquivVerdict distinct(DistinctWitness w);
  static EquivVerdict unknown(UnknownDiagnostics diag);

  Status status() const { return status_; }
  bool is_equivalent() const { return status_ == Status::Equivalent; }
  bool is_distinct() const { return status_ == Status::Distinct; }
  const EquivCertificate& certificate() const;
  const DistinctWitness& witness() const;
  const UnknownDiagnostics& diagnostics() const;
  std::string status_name() const;

 private:
  Status status_ = Status::Unknown;
  std::variant<std::monostate, EquivCertificate, DistinctWitness, UnknownDiagnostics> payload_;
};

/// Enclosure of lim_n ||s_n, t_n|| of width <= eps.
///
/// Index selection: with R a certified bound on all tail terms and delta
/// chosen so continuity_cap(spec, R, delta) <= eps/4, every term past
/// n* = max(modulus_s(delta), modulus_t(delta)) has its norm within eps/4 of
/// the limit; the norm at n* is then enclosed to eps/4 and widened by the cap.
/// When both sequences are exactly constant this reduces bit-for-bit to
/// norm_eval of their values.
Interval limit_norm(const TwoNormSpec& spec, const SeqSpec& s, const SeqSpec& t,
                    const Rational& eps);

/// Equivalence of Cauchy sequences: s ~ t iff lim ||s_n - t_n, z|| = 0 for
/// every z, checked against the canonical basis (which suffices; see the
/// SeqSpec notes). The difference norm limit is enclosed at tolerances
/// halving down to 2^-budget; a strictly positive lower enclosure at any
/// level certifies distinctness, enclosures at the final level entirely
/// below 2^-budget certify equivalence at that budget.
EquivVerdict are_equivalent(const TwoNormSpec& spec, const SeqSpec& s, const SeqSpec& t,
                            int budget = 30);

namespace detail {

/// Neutral parameter dump of a sequence node, used by the JSON layer without
/// coupling the core to a serialization library.
struct WireForm {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> scalars;  // name -> "p/q"
  std::vector<std::pair<std::string, VectorQ>> vectors;
  std::vector<std::pair<std::string, SeqSpec>> children;
};

class SeqNode {
 public:
  virtual ~SeqNode() = default;
  virtual VectorQ term(Index n) const = 0;
  virtual VectorQ term_approx(Index n, const Rational& /*tol*/) const { return term(n); }
  virtual Index modulus(const Rational& eps) const = 0;
  virtual int dim() const = 0;
  virtual std::string kind_name() const = 0;
  virtual std::optional<VectorQ> constant_value() const { return std::nullopt; }
  virtual bool serializable() const { return true; }
  virtual WireForm wire_form() const;
};

struct LimitNormDetail {
  Interval enclosure;
  Index index_used;
  Rational delta;
};

LimitNormDetail limit_norm_detail(const TwoNormSpec& spec, const SeqSpec& s,
                                  const SeqSpec& t, const Rational& eps);

}  // namespace detail

}  // namespace q2n
