#include <doctest.h>

#include "oracles.hpp"
#include "q2n/sampler.hpp"
#include "q2n/sequence.hpp"

using namespace q2n;

namespace {
const VectorQ kX{Rational(1), Rational(2), Rational(3)};
const VectorQ kE1 = VectorQ::basis(3, 0);
const VectorQ kE2 = VectorQ::basis(3, 1);

SeqSpec newton2(long x0) { return SeqSpec::newton_sqrt(Rational(2), kE1, Rational(x0)); }
}  // namespace

TEST_CASE("sequence terms") {
  CHECK(SeqSpec::constant(kX).term(0) == kX);
  CHECK(SeqSpec::constant(kX).term(99) == kX);

  SeqSpec geo = SeqSpec::geometric(kX, kE1, Rational(1, 2));
  CHECK(geo.term(3) == kX + kE1 * Rational(1, 8));
  CHECK(geo.term(0) == kX + kE1);

  // Newton orbit for sqrt(2) from 1: 1, 3/2, 17/12, 577/408 (oracle recomputed).
  SeqSpec newt = newton2(1);
  auto orbit = oracles::newton_orbit(mpq_class(2), mpq_class(1), 4);
  CHECK(orbit[3] == mpq_class(577, 408));
  for (int n = 0; n < 4; ++n) {
    CHECK(newt.term(static_cast<Index>(n))[0].raw() == orbit[static_cast<size_t>(n)]);
    CHECK(newt.term(static_cast<Index>(n))[1].is_zero());
  }
}

TEST_CASE("sequence parameter validation") {
  CHECK_THROWS_AS(SeqSpec::geometric(kX, kE1, Rational(1)), ParameterError);
  CHECK_THROWS_AS(SeqSpec::geometric(kX, kE1, Rational(0)), ParameterError);
  CHECK_THROWS_AS(SeqSpec::geometric(kX, VectorQ{Rational(1), Rational(2)}, Rational(1, 2)),
                  DimensionMismatch);
  CHECK_THROWS_AS(SeqSpec::newton_sqrt(Rational(4), kE1, Rational(1)), ParameterError);
  CHECK_THROWS_AS(SeqSpec::newton_sqrt(Rational(-2), kE1, Rational(1)), ParameterError);
  CHECK_THROWS_AS(SeqSpec::newton_sqrt(Rational(2), kE1, Rational(0)), ParameterError);
  CHECK_THROWS_AS(SeqSpec::newton_sqrt(Rational(2), VectorQ::zero(3), Rational(1)),
                  ParameterError);
  CHECK_THROWS_AS(SeqSpec::sum(SeqSpec::constant(kX),
                               SeqSpec::constant(VectorQ{Rational(1), Rational(2)})),
                  DimensionMismatch);
}

TEST_CASE("convergence moduli satisfy their contracts") {
  CHECK(SeqSpec::constant(kX).modulus(Rational(1, 1000)) == 0);

  // Geometric with |d| = 1, r = 1/2 at eps = 1/8: first N with
  // 4 (1/2)^N <= 1/8 is N = 5.
  SeqSpec geo = SeqSpec::geometric(kX, kE1, Rational(1, 2));
  CHECK(geo.modulus(Rational(1, 8)) == 5);
  Rational bound = Rational(2) * Rational(1, 2).pow_int(5) / (Rational(1) - Rational(1, 2));
  CHECK(bound <= Rational(1, 8));

  // Monotone: finer tolerance, later index.
  Index prev = 0;
  for (int j = 0; j <= 24; ++j) {
    Index n = geo.modulus(Rational::pow2(-j));
    CHECK(n >= prev);
    prev = n;
  }

  // Sampled Cauchy check against the declared modulus, exact on squares.
  SeqSpec newt = newton2(1);
  for (int j : {3, 10, 24}) {
    Rational eps = Rational::pow2(-j);
    for (const SeqSpec& s : {geo, newt}) {
      Index n0 = s.modulus(eps);
      for (Index a : {n0, n0 + 1, n0 + 2}) {
        for (Index b : {n0, n0 + 3, n0 + 5}) {
          VectorQ d = s.term(a) - s.term(b);
          CHECK(d.norm_sq() <= eps * eps);
        }
      }
    }
  }

  CHECK_THROWS_AS(geo.modulus(Rational(0)), DomainError);
}

TEST_CASE("sequence algebra") {
  SeqSpec newt = newton2(1);
  SeqSpec zero = SeqSpec::diff(newt, newt);
  CHECK(zero.term(0).is_zero());
  CHECK(zero.term(7).is_zero());

  SeqSpec sum = SeqSpec::sum(SeqSpec::constant(kX), SeqSpec::constant(kE1));
  CHECK(sum.term(5) == kX + kE1);
  CHECK(sum.constant_value() == kX + kE1);

  SeqSpec scaled_zero = SeqSpec::scale(Rational(0), newt);
  CHECK(scaled_zero.term(3).is_zero());
  CHECK(scaled_zero.modulus(Rational(1, 1024)) == 0);
  CHECK(scaled_zero.constant_value() == VectorQ::zero(3));

  // Difference of the two sqrt(2) orbits obeys its combined modulus against
  // a basis test vector, exactly on squares.
  SeqSpec d = SeqSpec::diff(newton2(1), newton2(2));
  for (int j : {5, 12, 20}) {
    Rational eps = Rational::pow2(-j);
    Index n0 = d.modulus(eps);
    for (Index n : {n0, n0 + 1, n0 + 4}) {
      CHECK(norm_sq_cross(d.term(n), kE2) <= eps * eps);
    }
  }
}

TEST_CASE("limit_norm on constant sequences is the plain norm, bit for bit") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  Rational eps = Rational::pow2(-20);
  VectorQ y{Rational(4), Rational(5), Rational(6)};
  CHECK(limit_norm(cross, SeqSpec::constant(kX), SeqSpec::constant(y), eps) ==
        norm_eval(cross, kX, y, eps));
}

TEST_CASE("limit_norm encloses the sqrt(2) limit") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  Rational eps = Rational::pow2(-20);
  Interval enc = limit_norm(cross, newton2(1), SeqSpec::constant(kE2), eps);
  CHECK(enc.width() <= eps);
  CHECK(enc.lo() * enc.lo() <= Rational(2));
  CHECK(enc.hi() * enc.hi() >= Rational(2));

  auto [olo, ohi] = oracles::newton_sqrt_bracket(mpq_class(2), mpq_class(1, 1l << 40));
  CHECK(enc.lo().raw() <= ohi);
  CHECK(enc.hi().raw() >= olo);

  CHECK_THROWS_AS(limit_norm(cross, newton2(1), SeqSpec::constant(kE2), Rational(0)),
                  DomainError);
}

TEST_CASE("limit_norm of a geometric sequence reaches its limit point") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  Rational eps = Rational::pow2(-16);
  VectorQ d{Rational(2), Rational(-1), Rational(1, 3)};
  SeqSpec geo = SeqSpec::geometric(kX, d, Rational(1, 2));
  VectorQ y{Rational(0), Rational(1), Rational(2)};
  Interval enc = limit_norm(cross, geo, SeqSpec::constant(y), eps);
  Rational truth_sq = norm_sq_cross(kX, y);
  CHECK(enc.lo() * enc.lo() <= truth_sq);
  CHECK(enc.hi() * enc.hi() >= truth_sq);
  CHECK(enc.width() <= eps);
}

TEST_CASE("equivalence verdicts on the fixture families") {
  TwoNormSpec cross = TwoNormSpec::cross3();

  // Tail (1/2)^n d vanishes: same class as the constant.
  VectorQ d{Rational(1), Rational(-2), Rational(3)};
  EquivVerdict v1 = are_equivalent(cross, SeqSpec::geometric(kX, d, Rational(1, 2)),
                                   SeqSpec::constant(kX));
  CHECK(v1.is_equivalent());
  CHECK(v1.certificate().budget == 30);

  // Distinct constants separate against e2 with separation exactly 1.
  EquivVerdict v2 =
      are_equivalent(cross, SeqSpec::constant(VectorQ::zero(3)), SeqSpec::constant(kE1));
  CHECK(v2.is_distinct());
  CHECK(v2.witness().z == kE2);
  CHECK(v2.witness().separation == Rational(1));

  // Both Newton orbits converge to sqrt(2) e1 (oracle: high iterates agree
  // to far below the budget tolerance).
  auto o1 = oracles::newton_orbit(mpq_class(2), mpq_class(1), 8);
  auto o2 = oracles::newton_orbit(mpq_class(2), mpq_class(2), 8);
  mpq_class gap = abs(o1.back() - o2.back());
  CHECK(gap < mpq_class(1, 1l << 40));
  EquivVerdict v3 = are_equivalent(cross, newton2(1), newton2(2));
  CHECK(v3.is_equivalent());

  // Reflexivity for every built-in fixture.
  for (const SeqSpec& s : {SeqSpec::constant(kX), SeqSpec::geometric(kX, d, Rational(1, 3)),
                           newton2(1)}) {
    CHECK(are_equivalent(cross, s, s).is_equivalent());
  }

  // Verdict symmetry.
  CHECK(are_equivalent(cross, SeqSpec::constant(kE1), SeqSpec::constant(VectorQ::zero(3)))
            .is_distinct());
  CHECK(are_equivalent(cross, SeqSpec::constant(kX),
                       SeqSpec::geometric(kX, d, Rational(1, 2)))
            .is_equivalent());
}

TEST_CASE("verdicts are budget-sensitive") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  // Non-constant carriers with limits 2^-40 apart: a budget of 10 certifies
  // equivalence at its tolerance (difference norm limit <= 2^-10), a budget
  // past the separation certifies distinctness. Exactly-constant pairs would
  // instead resolve at any budget, since their norms evaluate exactly.
  SeqSpec to_zero = SeqSpec::geometric(VectorQ::zero(3), kE1, Rational(1, 2));
  SeqSpec to_tiny =
      SeqSpec::geometric(kE1 * Rational::pow2(-40), kE1, Rational(1, 3));
  CHECK(are_equivalent(cross, to_zero, to_tiny, 10).is_equivalent());
  CHECK(are_equivalent(cross, to_zero, to_tiny, 45).is_distinct());

  // Exact evaluation resolves constant pairs regardless of the budget.
  SeqSpec zero = SeqSpec::constant(VectorQ::zero(3));
  SeqSpec tiny = SeqSpec::constant(kE1 * Rational::pow2(-40));
  CHECK(are_equivalent(cross, zero, tiny, 10).is_distinct());

  CHECK_THROWS_AS(are_equivalent(cross, zero, tiny, 0), ParameterError);
}

TEST_CASE("distinct witnesses persist beyond their index") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  SeqSpec s = SeqSpec::geometric(VectorQ::zero(3), kE1, Rational(1, 2));
  SeqSpec t = SeqSpec::constant(kE1);
  EquivVerdict v = are_equivalent(cross, s, t);
  REQUIRE(v.is_distinct());
  const DistinctWitness& w = v.witness();
  SeqSpec d = SeqSpec::diff(s, t);
  for (Index n : {w.index, w.index + 2, w.index + 6}) {
    Interval enc = norm_eval(cross, d.term(n), w.z, Rational::pow2(-30));
    CHECK(enc.hi() >= w.separation);
  }
}

TEST_CASE("joint modulus from an equivalence certificate") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  EquivVerdict v = are_equivalent(cross, newton2(1), newton2(2));
  REQUIRE(v.is_equivalent());
  const EquivCertificate& cert = v.certificate();
  for (int j : {5, 10, 20}) {
    Rational eps = Rational::pow2(-j);
    Index n0 = cert.joint_modulus(eps);
    SeqSpec d = cert.difference;
    for (Index n : {n0, n0 + 1, n0 + 3}) {
      CHECK(d.term(n).norm_sq() <= eps * eps);
    }
  }
}

TEST_CASE("equivalence is linear over sums and scalings") {
  TwoNormSpec cross = TwoNormSpec::cross3();
  VectorQ d{Rational(1), Rational(0), Rational(-2)};
  SeqSpec s = newton2(1), a = newton2(2);
  SeqSpec t = SeqSpec::geometric(kX, d, Rational(1, 2)), b = SeqSpec::constant(kX);
  REQUIRE(are_equivalent(cross, s, a).is_equivalent());
  REQUIRE(are_equivalent(cross, t, b).is_equivalent());

  CHECK(are_equivalent(cross, SeqSpec::sum(s, t), SeqSpec::sum(a, b)).is_equivalent());
  Rational alpha(-7, 3);
  CHECK(are_equivalent(cross, SeqSpec::scale(alpha, s), SeqSpec::scale(alpha, a))
            .is_equivalent());
}

TEST_CASE("dynamic sequences refuse serialization but evaluate") {
  SeqSpec dyn = SeqSpec::dynamic([](Index n) { return VectorQ::basis(3, 0) * Rational(1, static_cast<long>(n + 1)); },
                                 [](const Rational&) { return Index(0); }, 3, "test_rule");
  CHECK_FALSE(dyn.serializable());
  CHECK(dyn.term(1) == kE1 * Rational(1, 2));
  CHECK(dyn.kind_name() == "test_rule");
}
