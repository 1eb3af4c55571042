#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfsm/rational.hpp"

namespace pfsm {

inline bool coeff_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(double x) { return x == 0.0; }
inline Rational coeff_times_int(const Rational& x, long k) { return x * k; }
inline double coeff_times_int(double x, long k) { return x * static_cast<double>(k); }

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1; otherwise the leading
/// coefficient is nonzero.
template <class Coeff>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(Coeff c) { return UniPoly(std::vector<Coeff>{std::move(c)}); }
  static UniPoly monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly variable() { return monomial(Coeff(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const Coeff> coefficients() const { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    if (c_.empty()) return X(0);
    X acc(c_.back());
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  UniPoly derivative() const {
    std::vector<Coeff> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(coeff_times_int(c_[i], static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    std::vector<Coeff> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return UniPoly(std::move(v));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const UniPoly& longer = a.c_.size() >= b.c_.size() ? a : b;
    const UniPoly& shorter = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<Coeff> v = longer.c_;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i) v[i] = v[i] + shorter.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1);
    std::vector<bool> set(v.size(), false);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (set[i + j])
          v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        else
          v[i + j] = a.c_[i] * b.c_[j];
        set[i + j] = true;
      }
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const Coeff& s) {
    std::vector<Coeff> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const Coeff& s, const UniPoly& a) { return a * s; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!coeff_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using QPoly = UniPoly<Rational>;

struct QDivision {
  QPoly quotient;
  QPoly remainder;
};

QDivision divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact quotient part

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// s with s*a = 1 (mod m); requires gcd(a, m) = 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

QPoly monic(const QPoly& p);

/// Integer coefficients with gcd 1 and positive leading coefficient.
QPoly primitive(const QPoly& p);

/// Product of the distinct irreducible factors, primitive.
QPoly squarefree_part(const QPoly& p);

/// Yun decomposition: p = c * prod_i factors[i]^(i+1), each factor squarefree
/// and primitive (possibly constant 1).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

QPoly compose(const QPoly& outer, const QPoly& inner);

Rational eval(const QPoly& p, const Rational& x);
int sign_at(const QPoly& p, const Rational& x);

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
std::pair<Rational, Rational> eval_interval(const QPoly& p, const Rational& lo, const Rational& hi);

bool is_even(const QPoly& p);
bool is_odd(const QPoly& p);

/// For even p(x) = q(x^2), returns q.
QPoly even_reduce(const QPoly& p);

/// Substitutes x -> x^2.
QPoly square_variable(const QPoly& q);

/// Human readable form, e.g. "2*x^2-1".
std::string to_string(const QPoly& p, const std::string& var = "x");

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const QPoly& p);

}  // namespace pfsm
