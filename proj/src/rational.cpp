#include "q2n/rational.hpp"

#include <ostream>

namespace q2n {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // trim ASCII whitespace
  size_t b = text.find_first_not_of(" \t\r\n");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw ParseError("empty rational token");
  text = text.substr(b, e - b + 1);

  std::string num_s, den_s = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_s = std::string(text.substr(0, slash));
    den_s = std::string(text.substr(slash + 1));
  } else {
    num_s = std::string(text);
  }
  mpz_class num, den;
  try {
    num = mpz_class(num_s, 10);
    den = mpz_class(den_s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational token: '" + std::string(text) + "'");
  }
  if (den == 0) throw ParseError("rational token with zero denominator: '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(long k) {
  mpz_class one = 1;
  mpq_class q;
  if (k >= 0) {
    mpz_class n;
    mpz_mul_2exp(n.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    q = mpq_class(n, 1);
  } else {
    mpz_class d;
    mpz_mul_2exp(d.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    q = mpq_class(1, d);
  }
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long ue = static_cast<unsigned long>(invert ? -e : e);
  if (invert && is_zero()) throw DomainError("zero to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  mpq_class q = invert ? mpq_class(den, num) : mpq_class(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::round_down_dyadic(unsigned bits) const {
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), v_.get_num().get_mpz_t(), bits);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v_.get_den().get_mpz_t());
  mpz_class one = 1, den;
  mpz_mul_2exp(den.get_mpz_t(), one.get_mpz_t(), bits);
  mpq_class r(q, den);
  r.canonicalize();
  return Rational(std::move(r));
}

Rational Rational::round_up_dyadic(unsigned bits) const {
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), v_.get_num().get_mpz_t(), bits);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v_.get_den().get_mpz_t());
  mpz_class one = 1, den;
  mpz_mul_2exp(den.get_mpz_t(), one.get_mpz_t(), bits);
  mpq_class r(q, den);
  r.canonicalize();
  return Rational(std::move(r));
}

bool Rational::is_perfect_square() const {
  if (sgn() < 0) return false;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
  if (!is_perfect_square()) throw DomainError("sqrt_exact on a non-square rational");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

bool Rational::is_perfect_power(unsigned n) const {
  if (n == 0) throw DomainError("0th root");
  if (sgn() < 0) return false;
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), v_.get_num().get_mpz_t(), n);
  int exact_d = mpz_root(rd.get_mpz_t(), v_.get_den().get_mpz_t(), n);
  return exact_n != 0 && exact_d != 0;
}

Rational Rational::root_exact(unsigned n) const {
  if (!is_perfect_power(n)) throw DomainError("root_exact on a non-power rational");
  mpz_class rn, rd;
  mpz_root(rn.get_mpz_t(), v_.get_num().get_mpz_t(), n);
  mpz_root(rd.get_mpz_t(), v_.get_den().get_mpz_t(), n);
  mpq_class q(rn, rd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace q2n
