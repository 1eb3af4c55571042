#pragma once

#include <string>
#include <vector>

#include "pfsm/scalar.hpp"

namespace pfsm {

/// One period v(0..K-1) of a K-periodic potential; v(n) = window[n mod K].
/// A window with any Float entry is demoted to Float throughout.
class Potential {
 public:
  explicit Potential(std::vector<Scalar> window);

  /// v = lambda * w for a 0/1 word w.
  static Potential scaled_word(const std::vector<int>& word, const Scalar& lambda);

  std::size_t period() const { return window_.size(); }
  bool exact() const { return window_.front().is_exact(); }
  const std::vector<Scalar>& window() const { return window_; }
  const Scalar& at(long n) const;

  /// u(n) = v(n + j).
  Potential shifted(long j) const;
  /// u(n) = v(K - 1 - n), so the forward monodromy of u is M~^(0) of v.
  Potential reversed() const;
  /// Same operator written with period 2K.
  Potential doubled() const;
  Potential to_float() const;

  std::string to_string() const;

 private:
  std::vector<Scalar> window_;
};

struct Mat2 {
  Scalar m11, m12, m21, m22;

  Scalar det() const { return m11 * m22 - m12 * m21; }
  Scalar trace() const { return m11 + m22; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b);
  std::string to_string() const;
};

/// Matrix of polynomials in E (or lambda).
struct PolyMat2 {
  SPoly m11, m12, m21, m22;

  friend PolyMat2 operator*(const PolyMat2& a, const PolyMat2& b);
  Mat2 at(const Scalar& x) const;
};

/// [[E - v, -1], [1, 0]].
Mat2 transfer_matrix(const Scalar& v, const Scalar& energy);

/// Forward: T(j+K-1)...T(j). Reversed: T(j)T(j+1)...T(j+K-1).
Mat2 monodromy(const Potential& p, const Scalar& energy, long shift = 0, bool reversed = false);

/// The monodromy matrix with E kept as the polynomial variable.
PolyMat2 monodromy_polynomial(const Potential& p, long shift = 0, bool reversed = false);

/// tr M(E), monic of degree K.
SPoly trace_polynomial(const Potential& p);

/// M(E) from the four Dirichlet determinants of H_{a..b} - E. Period 1 is
/// doubled first, so the result is the period-2 monodromy T(1)T(0) = T(0)^2.
Mat2 monodromy_via_determinants(const Potential& p, const Scalar& energy);

/// Symmetric tridiagonal H_{a..b}: diagonal v(a..b), unit off-diagonals.
struct FiniteSection {
  long a;
  long b;
  std::vector<Scalar> diagonal;

  std::size_t size() const { return diagonal.size(); }
};

FiniteSection finite_section(const Potential& p, long a, long b);

/// det(H_{a..b} - E) by division-free cofactor expansion; 1 when b < a.
Scalar section_determinant(const Potential& p, long a, long b, const Scalar& energy);

/// det(H_{a..b} - E) as a polynomial in E; 1 when b < a.
SPoly section_characteristic(const Potential& p, long a, long b);

}  // namespace pfsm
