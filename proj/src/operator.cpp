#include "pfsm/operator.hpp"

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

long wrap(long n, long k) {
  long r = n % k;
  return r < 0 ? r + k : r;
}

bool ring_is_zero(const Scalar& x) { return x.is_zero(); }
bool ring_is_zero(const SPoly& x) { return x.is_zero(); }

// Cofactor expansion along the first remaining row, skipping zero entries;
// tridiagonal input keeps the number of nonzero terms Fibonacci-sized.
template <class R>
R cofactor_det(const std::vector<std::vector<R>>& a, std::size_t row, std::vector<bool>& used, const R& one) {
  std::size_t n = a.size();
  if (row == n) return one;
  R acc = one - one;
  int parity = 0;  // number of unused columns left of the current one
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (!ring_is_zero(a[row][c])) {
      used[c] = true;
      R minor = cofactor_det(a, row + 1, used, one);
      used[c] = false;
      R term = a[row][c] * minor;
      if (parity % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
    }
    ++parity;
  }
  return acc;
}

template <class R>
R dense_det(const std::vector<std::vector<R>>& a, const R& one) {
  std::vector<bool> used(a.size(), false);
  return cofactor_det(a, 0, used, one);
}

}  // namespace

Potential::Potential(std::vector<Scalar> window) : window_(std::move(window)) {
  if (window_.empty()) throw DomainError("potential needs period K >= 1");
  bool any_float = false;
  for (const auto& x : window_) any_float = any_float || !x.is_exact();
  if (any_float)
    for (auto& x : window_) x = x.to_float();
}

Potential Potential::scaled_word(const std::vector<int>& word, const Scalar& lambda) {
  std::vector<Scalar> w;
  for (int b : word) {
    if (b != 0 && b != 1) throw DomainError("word entries must be 0 or 1");
    w.push_back(b ? lambda : lambda.like(Rational(0)));
  }
  return Potential(std::move(w));
}

const Scalar& Potential::at(long n) const { return window_[wrap(n, static_cast<long>(period()))]; }

Potential Potential::shifted(long j) const {
  std::vector<Scalar> w;
  for (long n = 0; n < static_cast<long>(period()); ++n) w.push_back(at(n + j));
  return Potential(std::move(w));
}

Potential Potential::reversed() const { return Potential(std::vector<Scalar>(window_.rbegin(), window_.rend())); }

Potential Potential::doubled() const {
  std::vector<Scalar> w = window_;
  w.insert(w.end(), window_.begin(), window_.end());
  return Potential(std::move(w));
}

Potential Potential::to_float() const {
  std::vector<Scalar> w;
  for (const auto& x : window_) w.push_back(x.to_float());
  return Potential(std::move(w));
}

std::string Potential::to_string() const {
  std::string out;
  for (const auto& x : window_) out += (out.empty() ? "" : ",") + x.to_string();
  return out;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22, a.m21 * b.m11 + a.m22 * b.m21,
          a.m21 * b.m12 + a.m22 * b.m22};
}

bool operator==(const Mat2& a, const Mat2& b) {
  return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 && a.m22 == b.m22;
}

std::string Mat2::to_string() const {
  return "[[" + m11.to_string() + ", " + m12.to_string() + "], [" + m21.to_string() + ", " + m22.to_string() + "]]";
}

PolyMat2 operator*(const PolyMat2& a, const PolyMat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22, a.m21 * b.m11 + a.m22 * b.m21,
          a.m21 * b.m12 + a.m22 * b.m22};
}

Mat2 PolyMat2::at(const Scalar& x) const {
  return {m11.evaluate(x), m12.evaluate(x), m21.evaluate(x), m22.evaluate(x)};
}

Mat2 transfer_matrix(const Scalar& v, const Scalar& energy) {
  return {energy - v, v.like(Rational(-1)), v.like(Rational(1)), v.like(Rational(0))};
}

Mat2 monodromy(const Potential& p, const Scalar& energy, long shift, bool reversed) {
  long k = static_cast<long>(p.period());
  const Scalar& proto = p.at(0);
  Mat2 m{proto.like(Rational(1)), proto.like(Rational(0)), proto.like(Rational(0)), proto.like(Rational(1))};
  for (long i = 0; i < k; ++i) {
    Mat2 t = transfer_matrix(p.at(shift + i), energy);
    m = reversed ? m * t : t * m;
  }
  return m;
}

PolyMat2 monodromy_polynomial(const Potential& p, long shift, bool reversed) {
  long k = static_cast<long>(p.period());
  const Scalar& proto = p.at(0);
  Scalar one = proto.like(Rational(1));
  PolyMat2 m{SPoly::constant(one), SPoly{}, SPoly{}, SPoly::constant(one)};
  for (long i = 0; i < k; ++i) {
    PolyMat2 t{SPoly{-p.at(shift + i), one}, SPoly::constant(-one), SPoly::constant(one), SPoly{}};
    m = reversed ? m * t : t * m;
  }
  return m;
}

SPoly trace_polynomial(const Potential& p) {
  PolyMat2 m = monodromy_polynomial(p);
  return m.m11 + m.m22;
}

FiniteSection finite_section(const Potential& p, long a, long b) {
  if (a > b) throw DomainError("empty section");
  FiniteSection s{a, b, {}};
  for (long n = a; n <= b; ++n) s.diagonal.push_back(p.at(n));
  return s;
}

Scalar section_determinant(const Potential& p, long a, long b, const Scalar& energy) {
  Scalar one = p.at(0).like(Rational(1)), zero = p.at(0).like(Rational(0));
  if (b < a) return one;
  std::size_t n = static_cast<std::size_t>(b - a + 1);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = p.at(a + static_cast<long>(i)) - energy;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = one;
  }
  return dense_det(m, one);
}

SPoly section_characteristic(const Potential& p, long a, long b) {
  Scalar one = p.at(0).like(Rational(1));
  SPoly unit = SPoly::constant(one);
  if (b < a) return unit;
  std::size_t n = static_cast<std::size_t>(b - a + 1);
  std::vector<std::vector<SPoly>> m(n, std::vector<SPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = SPoly{p.at(a + static_cast<long>(i)), -one};
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = unit;
  }
  return dense_det(m, unit);
}

Mat2 monodromy_via_determinants(const Potential& p, const Scalar& energy) {
  if (p.period() == 1) return monodromy_via_determinants(p.doubled(), energy);
  long k = static_cast<long>(p.period());
  Scalar s = p.at(0).like(Rational(k % 2 == 1 ? 1 : -1));
  return {s * -section_determinant(p, 0, k - 1, energy), s * -section_determinant(p, 1, k - 1, energy),
          s * section_determinant(p, 0, k - 2, energy), s * section_determinant(p, 1, k - 2, energy)};
}

}  // namespace pfsm
