#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace pfsm {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// "p" or "p/q", always in lowest terms.
std::string to_string(const Rational& x);

/// Decimal expansion rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& x, int digits);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// 2^-bits as a rational.
Rational pow2_neg(unsigned bits);

/// Rationals lo <= sqrt(x) <= hi with hi - lo <= width. x >= 0.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, const Rational& width);

/// Writes n = root^2 * core with core squarefree (sign carried by core).
struct SquareDecomposition {
  Integer root;
  Integer core;
};
SquareDecomposition square_decompose(const Integer& n);

/// The rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Exact dyadic/decimal conversion of a finite double.
Rational exact_from_double(double x);

/// Nearest double, ties to even (mpq_get_d truncates).
double to_nearest_double(const Rational& x);

}  // namespace pfsm
