#pragma once

#include <memory>
#include <optional>
#include <string>

#include "q2n/interval.hpp"
#include "q2n/vector.hpp"

namespace q2n {

enum class NormKind { Cross3, Cross3P, Scaled, Affine, Mutant };

/// Descriptor of a concrete (quasi) 2-norm on Q^3, together with a certified
/// quasi constant K >= 1: an upper bound, valid by construction, on the
/// smallest K for which ||x+y, z|| <= K (||x, z|| + ||y, z||) holds. It is
/// not claimed minimal; the verifier's estimate_k reports a sound sampled
/// lower bound to compare against it.
///
/// Kinds:
///   Cross3        ||x, y|| = |x cross y|                      K = 1
///   Cross3P(p)    ell_p combination of the cross product's    K = 2^(1/p - 1)
///                 components, p = 1/s for an integer s >= 2;
///                 genuinely quasi (minimal K > 1)
///   Scaled(c, b)  c * b(x, y), c > 0                          K = max(1, K_b)
///   Affine(a, b)  a*base + b*base = (a+b) * base,             K = a + b
///                 a, b >= 1/2, base a plain 2-norm
///   Mutant(tag)   deliberately non-conforming evaluator used to exercise
///                 verifier failure paths; never a valid norm
class TwoNormSpec {
 public:
  static TwoNormSpec cross3();
  static TwoNormSpec cross3p(const Rational& p);
  static TwoNormSpec scaled(const Rational& c, TwoNormSpec base);
  static TwoNormSpec affine(const Rational& a, const Rational& b, TwoNormSpec base);
  static TwoNormSpec mutant(const std::string& tag);

  NormKind kind() const { return kind_; }
  int dim() const { return 3; }
  const Rational& certified_k() const { return certified_k_; }

  /// False for Mutant kinds, which exist only as negative test fixtures.
  bool conforming() const;

  /// True when the descriptor provably satisfies the plain triangle
  /// inequality (K = 1): the Cross3 / Scaled / Affine family.
  bool plain_triangle() const;

  // Parameter accessors; valid only for the corresponding kind.
  const Rational& p() const { return p_; }
  unsigned p_inverse() const { return s_; }  // s = 1/p for Cross3P
  const Rational& scale_c() const { return c_; }
  const Rational& affine_a() const { return a_; }
  const Rational& affine_b() const { return b_; }
  const std::string& mutant_tag() const { return tag_; }
  const TwoNormSpec& base() const;

  bool operator==(const TwoNormSpec& o) const;
  bool operator!=(const TwoNormSpec& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  TwoNormSpec() = default;
  NormKind kind_ = NormKind::Cross3;
  Rational certified_k_ = Rational(1);
  Rational p_, c_, a_, b_;
  unsigned s_ = 0;
  std::string tag_;
  std::shared_ptr<const TwoNormSpec> base_;
};

/// Enclosure of ||x, y|| of width <= eps. Symmetric in (x, y) bit for bit.
/// Scaled and Affine enclosures are exact endpoint multiples of the base
/// enclosure evaluated at eps scaled accordingly.
Interval norm_eval(const TwoNormSpec& spec, const VectorQ& x, const VectorQ& y,
                   const Rational& eps);

/// Exact rational value of ||x, y||^2 when the norm is a single square root
/// of a rational (Cross3 / Scaled / Affine / Mutant); nullopt for Cross3P
/// except at the exactly-zero case.
std::optional<Rational> norm_sq_exact(const TwoNormSpec& spec, const VectorQ& x,
                                      const VectorQ& y);

/// Exact zero test: ||x, y|| = 0 iff x cross y = 0, for every built-in kind.
bool norm_is_zero_exact(const TwoNormSpec& spec, const VectorQ& x, const VectorQ& y);

/// The exact factor by which the norm is a positive multiple of its root
/// evaluator (1 for Cross3/Cross3P/Mutant, c and a+b compounding through
/// Scaled/Affine chains). Tolerances are scaled by this factor wherever
/// ratios of norms are formed, which makes those ratios exactly invariant
/// under positive rescaling of the norm.
Rational norm_scale_factor(const TwoNormSpec& spec);

/// Rational L with ||d, z|| <= L |d| |z| for all d, z (Euclidean lengths).
/// Not defined for Mutant (discontinuous by construction).
Rational norm_euclid_factor(const TwoNormSpec& spec);

/// Upper bound on sup |  ||a,b|| - ||a',b'||  | over Euclidean |a|,|a'|,|b|,|b'| <= R
/// and |a-a'|, |b-b'| <= delta; vanishes as delta does (along dyadic
/// refinements: cap(delta/16) <= cap(delta)) and is the analytic heart of the
/// tail control used by limit norms and the uniform-continuity probe.
/// Linear in delta for the single-sqrt family; Hoelder-type for Cross3P.
Rational continuity_cap(const TwoNormSpec& spec, const Rational& radius,
                        const Rational& delta);

}  // namespace q2n
