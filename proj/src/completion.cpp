#include "q2n/completion.hpp"

namespace q2n {

namespace {

void require_same_space(const CompletionElem& a, const CompletionElem& b) {
  if (a.space() != b.space()) {
    throw ParameterError("completion elements live in different spaces");
  }
}

// Lower bound on the limit Euclidean distance between the representatives of
// two classes, from one tail term minus the tail slack.
Rational limit_distance_lower_bound(const CompletionElem& a, const CompletionElem& b,
                                    const Rational& slack) {
  SeqSpec d = SeqSpec::diff(a.rep(), b.rep(), a.space().certified_k());
  Index n = d.modulus(slack);
  Rational at_n = interval_sqrt(d.term(n).norm_sq(), slack).lo();
  return at_n - slack;
}

}  // namespace

CompletionElem::CompletionElem(TwoNormSpec space, SeqSpec rep)
    : space_(std::move(space)), rep_(std::move(rep)) {
  if (rep_.dim() != space_.dim()) {
    throw DimensionMismatch("representative dimension does not match the space");
  }
}

X0Elem embed(const TwoNormSpec& space, const VectorQ& x) {
  if (x.dim() != space.dim()) {
    throw DimensionMismatch("embed: vector dimension does not match the space");
  }
  return X0Elem{CompletionElem(space, SeqSpec::constant(x)), x};
}

CompletionElem completion_add(const CompletionElem& a, const CompletionElem& b) {
  require_same_space(a, b);
  return CompletionElem(a.space(), SeqSpec::sum(a.rep(), b.rep(), a.space().certified_k()));
}

CompletionElem completion_scale(const Rational& alpha, const CompletionElem& a) {
  return CompletionElem(a.space(), SeqSpec::scale(alpha, a.rep()));
}

Interval completion_norm(const CompletionElem& a, const CompletionElem& b, const Rational& eps) {
  require_same_space(a, b);
  return limit_norm(a.space(), a.rep(), b.rep(), eps);
}

EquivVerdict completion_equal(const CompletionElem& a, const CompletionElem& b, int budget) {
  require_same_space(a, b);
  return are_equivalent(a.space(), a.rep(), b.rep(), budget);
}

VectorQ approximate_by_x0(const CompletionElem& a, const Rational& eps) {
  if (eps.sgn() <= 0) throw DomainError("approximate_by_x0 requires eps > 0");
  // Evaluating to within eps/(2C) at the modulus for eps/(2C) keeps the
  // limit distance under eps/C even through approximated deep-tail terms.
  Rational half_target = eps / (Rational(8) * norm_euclid_factor(a.space()));
  return a.rep().term_approx(a.rep().modulus(half_target), half_target);
}

CompletionElem complete_limit(const TwoNormSpec& space,
                              std::function<CompletionElem(Index)> family,
                              std::function<Index(const Rational&)> family_modulus) {
  if (!family || !family_modulus) {
    throw ParameterError("complete_limit needs a family and its modulus");
  }

  // Spot-verify the certificate: a pair beyond family_modulus(2^-j) whose
  // limit distance is certifiably above 2^-j disproves the modulus.
  for (int j : {1, 3}) {
    Rational tol = Rational::pow2(-j);
    Index n = family_modulus(tol);
    for (Index offset : {Index(1), Index(2)}) {
      CompletionElem lhs = family(n);
      CompletionElem rhs = family(n + offset);
      if (lhs.space() != space || rhs.space() != space) {
        throw ParameterError("complete_limit family member lives in a different space");
      }
      Rational lb = limit_distance_lower_bound(lhs, rhs, Rational::pow2(-8));
      if (lb > tol) {
        throw InvalidCertificate("family modulus violated: members at " + std::to_string(n) +
                                 " and " + std::to_string(n + offset) +
                                 " are certifiably farther than 2^-" + std::to_string(j));
      }
    }
  }

  // Largest j in [0, 128] with family_modulus(2^-j) <= n, as a dyadic tail
  // bound at index n; 1 when even j = 0 is out of reach.
  auto family_tail = [family_modulus](Index n) -> Rational {
    Rational tail(1);
    bool any = false;
    for (int j = 0; j <= 128; ++j) {
      Rational tol = Rational::pow2(-j);
      if (family_modulus(tol) <= n) {
        tail = tol;
        any = true;
      } else {
        break;  // modulus is monotone; finer tolerances only get harder
      }
    }
    return any ? tail : Rational(1);
  };

  auto term = [family, family_tail](Index n) -> VectorQ {
    Rational eta = min(Rational(1, 1) / Rational(static_cast<long>(n) + 1), family_tail(n));
    return approximate_by_x0(family(n), eta);
  };

  // |c_n - c_m| <= eta_n + family tail + eta_m <= 3 * 2^-j once n, m are
  // past family_modulus(2^-j); pick j with 3 * 2^-j <= eps.
  auto modulus = [family_modulus](const Rational& eps) -> Index {
    if (eps.sgn() <= 0) throw DomainError("modulus requires eps > 0");
    Rational tol(1);
    int guard = 0;
    while (Rational(3) * tol > eps) {
      tol = tol / Rational(2);
      if (++guard > 4096) throw DomainError("complete_limit modulus underflow");
    }
    return family_modulus(tol);
  };

  SeqSpec diagonal = SeqSpec::dynamic(term, modulus, space.dim(), "diagonal");
  return CompletionElem(space, diagonal);
}

}  // namespace q2n
