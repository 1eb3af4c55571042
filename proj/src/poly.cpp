#include "pfsm/poly.hpp"

#include <algorithm>

#include "pfsm/errors.hpp"

namespace pfsm {

QDivision divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const Rational& lead = b.leading();
  auto bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * bc[i];
  }
  rem.resize(b.degree() > 0 ? b.degree() : 0);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).remainder; }
QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).quotient; }

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

QPoly primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> ints;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Rational v = c * den;
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
  }
  if (sgn(p.leading()) < 0) content = -content;
  for (auto& v : ints) v /= content;
  return QPoly(std::move(ints));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = primitive(r);
  }
  return monic(x);
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = a % m;
  QPoly s0, s1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("polynomial not invertible modulo minimal polynomial");
  return (s0 * Rational(1 / r0.leading())) % m;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return primitive(p);
  return primitive(p / gcd(p, p.derivative()));
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
  std::vector<QPoly> out;
  if (p.degree() == 0) return out;
  QPoly a = monic(p);
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  while (c.degree() > 0) {
    QPoly f = gcd(c, d);
    out.push_back(primitive(f));
    c = c / f;
    d = d / f - c.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

QPoly compose(const QPoly& outer, const QPoly& inner) {
  QPoly acc;
  auto oc = outer.coefficients();
  for (auto it = oc.rbegin(); it != oc.rend(); ++it) acc = acc * inner + QPoly::constant(*it);
  return acc;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const QPoly& p, const Rational& x) { return sgn(eval(p, x)); }

std::pair<Rational, Rational> eval_interval(const QPoly& p, const Rational& lo, const Rational& hi) {
  Rational a = 0, b = 0;
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    a = std::min({p1, p2, p3, p4}) + *it;
    b = std::max({p1, p2, p3, p4}) + *it;
  }
  return {a, b};
}

bool is_even(const QPoly& p) {
  auto c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2)
    if (sgn(c[i]) != 0) return false;
  return true;
}

bool is_odd(const QPoly& p) {
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); i += 2)
    if (sgn(c[i]) != 0) return false;
  return true;
}

QPoly even_reduce(const QPoly& p) {
  if (!is_even(p)) throw DomainError("even_reduce on a polynomial that is not even");
  std::vector<Rational> v;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); i += 2) v.push_back(c[i]);
  return QPoly(std::move(v));
}

QPoly square_variable(const QPoly& q) {
  auto c = q.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> v(2 * c.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i) v[2 * i] = c[i];
  return QPoly(std::move(v));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& a = c[i];
    if (sgn(a) == 0) continue;
    Rational mag = abs(a);
    if (sgn(a) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Rational root_bound(const QPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  auto c = p.coefficients();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(c[i] / p.leading())));
  return m + 1;
}

}  // namespace pfsm
