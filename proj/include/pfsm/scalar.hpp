#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "pfsm/poly.hpp"
#include "pfsm/rational.hpp"
#include "pfsm/roots.hpp"

namespace pfsm {

/// Exact real number tower with an explicit binary64 escape hatch.
///
/// Rational, quadratic surd a + b*sqrt(d), an element of Q(alpha) for an
/// isolated real algebraic alpha, or a double. Exact and Float values never
/// combine implicitly; use to_float() to demote.
class Scalar {
 public:
  enum class Kind { Rational, Surd, Algebraic, Float };

  struct Surd {
    Rational a;
    Rational b;
    Integer d;  // squarefree, >= 2
  };

  /// coords(alpha) where alpha is the generator; deg coords < deg minpoly.
  struct Algebraic {
    std::shared_ptr<const AlgebraicReal> generator;
    QPoly coords;
  };

  Scalar() : v_(Rational(0)) {}
  Scalar(int x) : v_(Rational(x)) {}
  Scalar(long x) : v_(Rational(x)) {}
  Scalar(const Rational& x) : v_(x) {}
  Scalar(const Integer& x) : v_(Rational(x)) {}

  static Scalar floating(double x);
  /// a + b*sqrt(n) for any integer n >= 0; square factors are pulled out.
  static Scalar surd(const Rational& a, const Rational& b, const Integer& n);
  /// sqrt(x) for rational x >= 0.
  static Scalar sqrt(const Rational& x);
  /// The real number isolated by r, in the simplest exact variant.
  static Scalar from_root(const AlgebraicReal& r);
  /// coords(alpha) in the field generated by alpha, normalised.
  static Scalar in_field(std::shared_ptr<const AlgebraicReal> generator, const QPoly& coords);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_exact() const { return kind() != Kind::Float; }
  bool is_rational() const { return kind() == Kind::Rational; }

  const Rational& rational() const;
  const Surd& surd() const;
  const Algebraic& algebraic() const;
  double float_value() const;

  double to_double() const;
  Scalar to_float() const { return floating(to_double()); }
  /// Rational c converted to the same exactness as this value.
  Scalar like(const Rational& c) const { return is_exact() ? Scalar(c) : floating(to_nearest_double(c)); }

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// Rational bounds lo <= x <= hi with hi - lo <= width.
  std::pair<Rational, Rational> enclosure(const Rational& width) const;
  /// Isolating representation; Float input is rejected.
  AlgebraicReal to_algebraic_real() const;

  /// Canonical lossless text: "p/q", "a+b*sqrt(d)", "root(poly; [lo,hi])".
  std::string to_string() const;
  /// Decimal with `digits` fractional digits, from a refined enclosure.
  std::string decimal(int digits = 12) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y);
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

 private:
  using Value = std::variant<Rational, Surd, Algebraic, double>;
  explicit Scalar(Value v) : v_(std::move(v)) {}
  Value v_;
};

/// -1, 0, +1 by value; exact across variants.
int compare(const Scalar& x, const Scalar& y);
Scalar abs(const Scalar& x);

inline bool coeff_is_zero(const Scalar& x) { return x.is_zero(); }
inline Scalar coeff_times_int(const Scalar& x, long k) { return x * x.like(Rational(k)); }

using SPoly = UniPoly<Scalar>;

/// Exact sign of p at x (p over the rationals).
int sign_at(const QPoly& p, const Scalar& x);

/// The coefficients as rationals when every one is rational.
bool as_rational_poly(const SPoly& p, QPoly& out);

SPoly to_spoly(const QPoly& p);

/// p = a + sqrt(d) * b with a, b rational; d = 1 and b = 0 when p is rational.
/// False when a coefficient lies outside a single Q(sqrt(d)) or is a Float.
struct QuadraticSplit {
  QPoly a;
  QPoly b;
  Integer d;
};
bool split_quadratic(const SPoly& p, QuadraticSplit& out);

/// Exact sign of p(x); p may have surd coefficients.
int sign_at(const SPoly& p, const Scalar& x);

struct ScalarRoot {
  Scalar value;
  int multiplicity;
};

/// Real roots of p with multiplicity, ascending. Coefficients must be rational
/// or lie in one Q(sqrt(d)); other exact fields raise DomainError.
std::vector<ScalarRoot> real_roots(const SPoly& p);

std::string to_string(const SPoly& p, const std::string& var);

}  // namespace pfsm
