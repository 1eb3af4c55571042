#include "pfsm/rational.hpp"

#include <cmath>

#include "pfsm/errors.hpp"

namespace pfsm {

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(x) * scale + Rational(1, 2);
  Integer n = floor(scaled);
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  bool zero = (n == 0);
  return (x < 0 && !zero ? "-" : "") + s;
}

Rational pow2_neg(unsigned bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& width) {
  if (x < 0) throw DomainError("square root of a negative rational");
  if (x == 0) return {Rational(0), Rational(0)};
  // sqrt(p/q) = sqrt(p*q*s^2)/(q*s) for a scale s large enough that the
  // integer square root step is below width.
  Integer p = x.get_num(), q = x.get_den();
  Integer s = 1;
  while (Rational(Integer(1), q * s) > width) s *= 2;
  Integer radicand = p * q * s * s;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
  Rational lo(r, q * s), hi(r + (r * r == radicand ? 0 : 1), q * s);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

SquareDecomposition square_decompose(const Integer& n) {
  if (n == 0) return {Integer(0), Integer(0)};
  Integer rest = abs(n);
  Integer root = 1, core = 1;
  const unsigned long kTrialLimit = 1000000;
  unsigned long p = 2;
  for (; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p * p;
    if (pp > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) root *= p;
    if (e % 2 == 1) core *= p;
  }
  // Any remaining cofactor has no prime factor below its cube root (or below
  // the trial limit), so it is 1, a prime, a prime square, or a product of
  // two distinct primes.
  if (rest > 1) {
    if (Integer(p) * p * p <= rest) throw DomainError("cannot certify squarefree part of " + n.get_str());
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else {
      core *= rest;
    }
  }
  if (n < 0) core = -core;
  return {root, core};
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer c = ceil(lo);
  if (c <= hi) return Rational(c);
  Integer f = floor(lo);
  Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  return Rational(f) + 1 / inner;
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite floating value");
  return Rational(x);
}

double to_nearest_double(const Rational& x) {
  if (sgn(x) == 0) return 0.0;
  if (sgn(x) < 0) return -to_nearest_double(-x);
  Integer num = x.get_num(), den = x.get_den();
  // Scale so that q = floor(num * 2^shift / den) lies in [2^53, 2^54).
  long shift = 53 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  Integer q, r;
  for (;;) {
    Integer n = num, d = den;
    if (shift >= 0)
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(shift));
    else
      mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-shift));
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    if (bits == 54) break;
    shift += bits < 54 ? 1 : -1;
  }
  bool round = mpz_tstbit(q.get_mpz_t(), 0);
  bool sticky = sgn(r) != 0;
  Integer m = q >> 1;
  if (round && (sticky || mpz_tstbit(m.get_mpz_t(), 0))) m += 1;
  return std::ldexp(m.get_d(), static_cast<int>(1 - shift));
}

}  // namespace pfsm
