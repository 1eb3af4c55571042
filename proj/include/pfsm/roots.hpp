#pragma once

#include <vector>

#include "pfsm/poly.hpp"
#include "pfsm/rational.hpp"

namespace pfsm {

/// A real root of `minpoly` isolated in [lo, hi]. The minimal polynomial is
/// squarefree, primitive and has exactly one root in the closed interval.
/// Degree-1 polynomials carry a degenerate interval lo == hi == root; for
/// higher degrees neither endpoint is a root, so minpoly changes sign on it.
struct AlgebraicReal {
  QPoly minpoly;
  Rational lo;
  Rational hi;

  bool is_rational() const { return minpoly.degree() == 1; }
  Rational rational_value() const;
};

/// Sturm chain of a squarefree polynomial, content-normalised at each step.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& squarefree);

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  std::vector<QPoly> chain_;
};

/// Real roots of p, multiplicity collapsed, sorted ascending. Each interval is
/// narrower than `width` (rational roots are exact). Rational roots get a
/// linear minpoly, roots of a rational quadratic factor get that quadratic,
/// everything else keeps the remaining squarefree cofactor.
std::vector<AlgebraicReal> isolate_real_roots(const QPoly& p, const Rational& width);

/// Exactly the rational roots of p (rational root test), ascending.
std::vector<Rational> rational_roots(const QPoly& p);

struct RootWithMultiplicity {
  AlgebraicReal root;
  int multiplicity;
};

/// Real roots counted with multiplicity via squarefree decomposition.
std::vector<RootWithMultiplicity> real_roots_with_multiplicity(const QPoly& p, const Rational& width);

/// Shrinks the isolating interval of an irrational root below `width`.
AlgebraicReal refine(const AlgebraicReal& r, const Rational& width);

/// Orders two isolated roots; 0 iff they denote the same real number.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

/// Exact sign of p at the root: zero is decided by a gcd with the minimal
/// polynomial, otherwise the interval is refined until the enclosure of p
/// excludes zero.
int sign_at(const QPoly& p, const AlgebraicReal& x);

/// Default isolation width used for display and for new number fields.
Rational default_isolation_width();

}  // namespace pfsm
