#include "q2n/two_norm.hpp"

#include <sstream>

namespace q2n {

TwoNormSpec TwoNormSpec::cross3() {
  TwoNormSpec s;
  s.kind_ = NormKind::Cross3;
  s.certified_k_ = Rational(1);
  return s;
}

TwoNormSpec TwoNormSpec::cross3p(const Rational& p) {
  if (p.sgn() <= 0 || p >= Rational(1)) {
    throw ParameterError("cross3p exponent must satisfy 0 < p < 1");
  }
  // Accept only p = 1/s with integer s so the quasi constant 2^(1/p - 1)
  // stays an exact rational.
  Rational inv = Rational(1) / p;
  if (!inv.is_integer()) {
    throw ParameterError("cross3p exponent must be the reciprocal of an integer (1/2, 1/3, ...)");
  }
  mpz_class s_z = inv.numerator();
  if (!s_z.fits_uint_p()) throw ParameterError("cross3p exponent too extreme");
  unsigned s_int = static_cast<unsigned>(s_z.get_ui());

  TwoNormSpec s;
  s.kind_ = NormKind::Cross3P;
  s.p_ = p;
  s.s_ = s_int;
  s.certified_k_ = Rational(2).pow_int(static_cast<long>(s_int) - 1);
  return s;
}

TwoNormSpec TwoNormSpec::scaled(const Rational& c, TwoNormSpec base) {
  if (c.sgn() <= 0) throw ParameterError("scale factor must be positive");
  TwoNormSpec s;
  s.kind_ = NormKind::Scaled;
  s.c_ = c;
  s.certified_k_ = max(Rational(1), base.certified_k());
  s.base_ = std::make_shared<const TwoNormSpec>(std::move(base));
  return s;
}

TwoNormSpec TwoNormSpec::affine(const Rational& a, const Rational& b, TwoNormSpec base) {
  if (a < Rational(1, 2) || b < Rational(1, 2)) {
    throw ParameterError("affine coefficients must satisfy a >= 1/2 and b >= 1/2");
  }
  // The a+b certificate is only valid over a base with a plain triangle
  // inequality; a genuinely quasi base would invalidate it.
  if (!base.plain_triangle()) {
    throw ParameterError("affine combination requires a base with quasi constant 1");
  }
  TwoNormSpec s;
  s.kind_ = NormKind::Affine;
  s.a_ = a;
  s.b_ = b;
  s.certified_k_ = a + b;
  s.base_ = std::make_shared<const TwoNormSpec>(std::move(base));
  return s;
}

TwoNormSpec TwoNormSpec::mutant(const std::string& tag) {
  if (tag != "asym") throw ParameterError("unknown mutant tag: '" + tag + "'");
  TwoNormSpec s;
  s.kind_ = NormKind::Mutant;
  s.tag_ = tag;
  s.certified_k_ = Rational(1);
  return s;
}

bool TwoNormSpec::conforming() const {
  switch (kind_) {
    case NormKind::Mutant: return false;
    case NormKind::Scaled:
    case NormKind::Affine: return base().conforming();
    default: return true;
  }
}

bool TwoNormSpec::plain_triangle() const {
  switch (kind_) {
    case NormKind::Cross3: return true;
    case NormKind::Scaled:
    case NormKind::Affine: return base().plain_triangle();
    case NormKind::Cross3P:
    case NormKind::Mutant: return false;
  }
  return false;
}

const TwoNormSpec& TwoNormSpec::base() const {
  if (!base_) throw DomainError("norm kind has no base");
  return *base_;
}

bool TwoNormSpec::operator==(const TwoNormSpec& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case NormKind::Cross3: return true;
    case NormKind::Cross3P: return p_ == o.p_;
    case NormKind::Scaled: return c_ == o.c_ && base() == o.base();
    case NormKind::Affine: return a_ == o.a_ && b_ == o.b_ && base() == o.base();
    case NormKind::Mutant: return tag_ == o.tag_;
  }
  return false;
}

std::string TwoNormSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case NormKind::Cross3: os << "cross3"; break;
    case NormKind::Cross3P: os << "cross3p(p=" << p_ << ")"; break;
    case NormKind::Scaled: os << "scaled(c=" << c_ << ", " << base().describe() << ")"; break;
    case NormKind::Affine:
      os << "affine(a=" << a_ << ", b=" << b_ << ", " << base().describe() << ")";
      break;
    case NormKind::Mutant: os << "mutant(" << tag_ << ")"; break;
  }
  return os.str();
}

namespace {

void require_dims(const TwoNormSpec& spec, const VectorQ& x, const VectorQ& y) {
  if (x.dim() != spec.dim() || y.dim() != spec.dim()) {
    throw DimensionMismatch("norm arguments must have dimension " + std::to_string(spec.dim()));
  }
}

// Asymmetric square: the cross-product square weighted by 4 on one side of
// the x1 <= y1 halfplane. Breaks 2N2 (and 2N3 for negative scalars) while
// keeping the exact zero set of a cross norm.
Rational mutant_sq(const VectorQ& x, const VectorQ& y) {
  Rational base = norm_sq_cross(x, y);
  return x[0] <= y[0] ? base : base * Rational(4);
}

// (sum_i |c_i|^(1/s))^s for the cross product c, enclosed to width <= eps.
Interval cross3p_eval(unsigned s, const VectorQ& x, const VectorQ& y, const Rational& eps) {
  VectorQ c = cross3(x, y);
  if (c.is_zero()) return Interval::point(Rational(0));

  Rational eps_i = min(Rational(1, 4), eps);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Interval acc = Interval::point(Rational(0));
    for (int i = 0; i < 3; ++i) {
      acc = acc + interval_root(c[i].abs(), s, eps_i);
    }
    Interval result = acc.pow_uint(s);
    if (result.width() <= eps) return result;
    // width of S^s is at most s * S.hi^(s-1) * width(S); retarget eps_i.
    Rational deriv = Rational(static_cast<long>(s)) *
                     max(Rational(1), acc.hi()).pow_int(static_cast<long>(s) - 1);
    eps_i = min(eps_i / Rational(2), eps / (Rational(8) * deriv));
  }
  throw DomainError("cross3p enclosure failed to converge");
}

}  // namespace

Interval norm_eval(const TwoNormSpec& spec, const VectorQ& x, const VectorQ& y,
                   const Rational& eps) {
  if (eps.sgn() <= 0) throw DomainError("norm_eval requires eps > 0");
  require_dims(spec, x, y);
  switch (spec.kind()) {
    case NormKind::Cross3:
      return interval_sqrt(norm_sq_cross(x, y), eps);
    case NormKind::Mutant:
      return interval_sqrt(mutant_sq(x, y), eps);
    case NormKind::Cross3P:
      return cross3p_eval(spec.p_inverse(), x, y, eps);
    case NormKind::Scaled:
      return norm_eval(spec.base(), x, y, eps / spec.scale_c()).scale_abs(spec.scale_c());
    case NormKind::Affine: {
      Rational f = spec.affine_a() + spec.affine_b();
      return norm_eval(spec.base(), x, y, eps / f).scale_abs(f);
    }
  }
  throw DomainError("unreachable norm kind");
}

std::optional<Rational> norm_sq_exact(const TwoNormSpec& spec, const VectorQ& x,
                                      const VectorQ& y) {
  require_dims(spec, x, y);
  switch (spec.kind()) {
    case NormKind::Cross3: return norm_sq_cross(x, y);
    case NormKind::Mutant: return mutant_sq(x, y);
    case NormKind::Scaled: {
      auto b = norm_sq_exact(spec.base(), x, y);
      if (!b) return std::nullopt;
      return *b * spec.scale_c() * spec.scale_c();
    }
    case NormKind::Affine: {
      auto b = norm_sq_exact(spec.base(), x, y);
      if (!b) return std::nullopt;
      Rational f = spec.affine_a() + spec.affine_b();
      return *b * f * f;
    }
    case NormKind::Cross3P:
      if (cross3(x, y).is_zero()) return Rational(0);
      return std::nullopt;
  }
  return std::nullopt;
}

bool norm_is_zero_exact(const TwoNormSpec& spec, const VectorQ& x, const VectorQ& y) {
  require_dims(spec, x, y);
  return cross3(x, y).is_zero();
}

Rational norm_scale_factor(const TwoNormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::Scaled: return spec.scale_c() * norm_scale_factor(spec.base());
    case NormKind::Affine:
      return (spec.affine_a() + spec.affine_b()) * norm_scale_factor(spec.base());
    default: return Rational(1);
  }
}

Rational norm_euclid_factor(const TwoNormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::Cross3: return Rational(1);
    case NormKind::Cross3P:
      // (sum |u_i|^(1/s))^s <= 3^s max|u_i| <= 3^s |u|.
      return Rational(3).pow_int(static_cast<long>(spec.p_inverse()));
    case NormKind::Scaled: return spec.scale_c() * norm_euclid_factor(spec.base());
    case NormKind::Affine:
      return (spec.affine_a() + spec.affine_b()) * norm_euclid_factor(spec.base());
    case NormKind::Mutant:
      throw DomainError("mutant norms have no continuity data");
  }
  throw DomainError("unreachable norm kind");
}

Rational continuity_cap(const TwoNormSpec& spec, const Rational& radius,
                        const Rational& delta) {
  if (radius.sgn() < 0 || delta.sgn() < 0) throw DomainError("continuity_cap needs R, delta >= 0");
  switch (spec.kind()) {
    case NormKind::Cross3:
      // |a x b - a' x b'| <= |a-a'| |b| + |a'| |b-b'| <= 2 R delta.
      return Rational(2) * radius * delta;
    case NormKind::Scaled:
      return spec.scale_c() * continuity_cap(spec.base(), radius, delta);
    case NormKind::Affine:
      return (spec.affine_a() + spec.affine_b()) * continuity_cap(spec.base(), radius, delta);
    case NormKind::Cross3P: {
      // With M(u) = sum |u_i|^(1/s): M subadditive, so |M(u) - M(u')| <=
      // M(u - u') <= 3 (2 R delta)^(1/s); then |M^s - M'^s| <=
      // s B^(s-1) |M - M'| with B = 3 (R^2)^(1/s) bounding M on the region.
      // The root-enclosure tolerance scales with delta so the bound vanishes
      // as delta does.
      unsigned s = spec.p_inverse();
      if (delta.is_zero()) return Rational(0);
      Rational d_euclid = Rational(2) * radius * delta;
      Rational root_tol = min(Rational(1, 16), delta);
      Rational root_d = interval_root(d_euclid, s, root_tol).hi();
      Rational b_cap = Rational(3) * interval_root(radius * radius, s, Rational(1, 16)).hi();
      return Rational(static_cast<long>(s)) *
             max(Rational(1), b_cap).pow_int(static_cast<long>(s) - 1) * Rational(3) * root_d;
    }
    case NormKind::Mutant:
      throw DomainError("mutant norms have no continuity data");
  }
  throw DomainError("unreachable norm kind");
}

}  // namespace q2n
