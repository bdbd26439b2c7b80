#pragma once

#include "q2n/sequence.hpp"

namespace q2n {

/// An element of the completion: an equivalence class of Cauchy sequences,
/// stored through one canonical representative. Two elements are equal as
/// classes iff completion_equal certifies their representatives equivalent;
/// class equality is a certified predicate, never structural comparison.
///
/// The norm on classes, completion_norm, is a pseudo quasi 2-norm: it is
/// symmetric, |alpha|-homogeneous and satisfies the quasi triangle inequality
/// with the space's certified K, but a zero norm does not imply dependence of
/// the classes (only the converse direction holds and is tested).
///
/// Usage precondition: completion-level operations rely on the uniform
/// continuity of the underlying norm on bounded regions; every built-in
/// conforming kind satisfies it (probe_uniform_continuity exercises the
/// bound), while Mutant kinds are rejected by the limit machinery.
class CompletionElem {
 public:
  CompletionElem(TwoNormSpec space, SeqSpec rep);

  const TwoNormSpec& space() const { return space_; }
  const SeqSpec& rep() const { return rep_; }

 private:
  TwoNormSpec space_;
  SeqSpec rep_;
};

/// A class with a constant representative: the canonical image of a point of
/// the base space inside the completion.
struct X0Elem {
  CompletionElem elem;
  VectorQ point;
  operator const CompletionElem&() const { return elem; }  // NOLINT: implicit by design
};

/// Embed a base-space vector as the class of its constant sequence. The
/// embedding is an exact isometry: completion_norm on two embedded points
/// reproduces norm_eval on the points bit for bit.
X0Elem embed(const TwoNormSpec& space, const VectorQ& x);

/// Class addition and scalar multiplication, via termwise combination of the
/// representatives. Well-definedness (independence of the representative
/// choice) is a tested property of the equivalence relation.
CompletionElem completion_add(const CompletionElem& a, const CompletionElem& b);
CompletionElem completion_scale(const Rational& alpha, const CompletionElem& a);

/// The limit norm ||a, b|| = lim ||a_n, b_n||, enclosed to width <= eps.
Interval completion_norm(const CompletionElem& a, const CompletionElem& b, const Rational& eps);

/// Certified class equality (equivalence of representatives).
EquivVerdict completion_equal(const CompletionElem& a, const CompletionElem& b, int budget = 30);

/// A base-space point x whose embedded class lies within eps of `a`: the
/// enclosure of completion_norm(a - embed(x), z_hat) stays strictly below eps
/// for every embedded basis test class z_hat. Realized by evaluating the
/// representative at its own modulus for eps / (4 L), L the norm's Euclidean
/// factor; the 4 absorbs enclosure slack. Witnesses the density of the
/// embedded subspace.
VectorQ approximate_by_x0(const CompletionElem& a, const Rational& eps);

/// Limit of a Cauchy family of completion elements, by the diagonal
/// construction: the returned class is represented by
///
///   c_n = approximate_by_x0(family(n), eta_n),
///   eta_n = min(1/(n+1), family tail bound at n),
///
/// so |c_n - c_m| <= eta_n + tail + eta_m and the diagonal inherits the
/// family's own modulus (three dyadic thirds of eps). Taking eta_n no larger
/// than the family's tail keeps the diagonal's modulus as fast as the
/// family's, which is what makes round-trip equivalence checks computable.
///
/// `family_modulus(eps)` must return N such that any two members beyond N are
/// within eps of each other in the limit Euclidean metric; the certificate is
/// spot-verified on a few pairs and rejected (InvalidCertificate) when a
/// violation is certified.
CompletionElem complete_limit(const TwoNormSpec& space,
                              std::function<CompletionElem(Index)> family,
                              std::function<Index(const Rational&)> family_modulus);

}  // namespace q2n
