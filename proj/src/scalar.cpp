#include "pfsm/scalar.hpp"

#include <charconv>
#include <cmath>
#include <optional>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

using Generator = std::shared_ptr<const AlgebraicReal>;

[[noreturn]] void mixing_error() { throw DomainError("exact input required: cannot mix float and exact scalars"); }

AlgebraicReal linear_root(const Rational& r) {
  return AlgebraicReal{primitive(QPoly{-r, Rational(1)}), r, r};
}

Rational generator_width() { return pow2_neg(40); }

// Does g have a root in the closed interval [lo, hi]?
bool has_root_in(const QPoly& g, const Rational& lo, const Rational& hi) {
  if (g.degree() < 1) return false;
  QPoly s = squarefree_part(g);
  if (sign_at(s, lo) == 0) return true;
  if (lo == hi) return false;
  return SturmSequence(s).count_roots(lo, hi) > 0;
}

// Root of an irreducible quadratic as a surd, choosing the sign by locating
// the root relative to the vertex.
Scalar quadratic_root(const AlgebraicReal& r) {
  Rational p2 = r.minpoly.coeff(2), p1 = r.minpoly.coeff(1), p0 = r.minpoly.coeff(0);
  Rational vertex = -p1 / (2 * p2);
  Rational disc = p1 * p1 - 4 * p2 * p0;
  AlgebraicReal x = r;
  int side = 0;
  while (side == 0) {
    if (x.hi < vertex)
      side = -1;
    else if (x.lo > vertex)
      side = 1;
    else
      x = refine(x, (x.hi - x.lo) / 2);
  }
  // root = vertex + side * sqrt(disc) / (2 |p2|) up to the sign of p2
  Rational scale = Rational(side) / (2 * abs(p2));
  Integer num = disc.get_num(), den = disc.get_den();
  // sqrt(num/den) = sqrt(num*den)/den
  return Scalar::surd(vertex, scale / Rational(den), num * den);
}

// Multiplication-by-c matrix on the power basis of Q[x]/(m), then its
// characteristic polynomial by Faddeev-LeVerrier.
QPoly characteristic_polynomial(const QPoly& c, const QPoly& m) {
  int n = m.degree();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  QPoly basis = QPoly::constant(Rational(1));
  for (int j = 0; j < n; ++j) {
    QPoly col = (c * basis) % m;
    for (int i = 0; i < n; ++i) a[i][j] = col.coeff(i);
    basis = (basis * QPoly::variable()) % m;
  }
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    mk = next;
    Rational trace = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    coeffs[n - k] = -trace / k;
  }
  return QPoly(coeffs);
}

std::optional<Generator> unify(const Generator& g1, const Generator& g2) {
  if (g1 == g2) return g1;
  if (g1->minpoly == g2->minpoly && compare(*g1, *g2) == 0) return g1;
  Rational lo = max(g1->lo, g2->lo), hi = min(g1->hi, g2->hi);
  if (lo > hi) return std::nullopt;
  QPoly g = gcd(g1->minpoly, g2->minpoly);
  if (!has_root_in(g, lo, hi)) return std::nullopt;
  g = primitive(g);
  if (g == g1->minpoly) return g1;
  if (g == g2->minpoly) return g2;
  if (g.degree() == 1) return std::make_shared<const AlgebraicReal>(linear_root(-g.coeff(0) / g.coeff(1)));
  return std::make_shared<const AlgebraicReal>(AlgebraicReal{g, lo, hi});
}

// Generator gamma = sqrt(d1) + sqrt(d2) and the coordinates of sqrt(d1),
// sqrt(d2) in Q(gamma).
struct CompositeField {
  Generator gamma;
  QPoly root1, root2;
};

CompositeField composite_field(const Integer& d1, const Integer& d2) {
  Rational s = Rational(d1 + d2), t = Rational(d1 - d2);
  QPoly m{t * t, Rational(0), -2 * s, Rational(0), Rational(1)};
  auto roots = isolate_real_roots(m, generator_width());
  Generator gamma = std::make_shared<const AlgebraicReal>(roots.back());
  QPoly x = QPoly::variable();
  QPoly cube = x * x * x;
  QPoly root1 = (cube - x * Rational(3 * d1 + d2)) * (Rational(1) / Rational(2 * (d2 - d1)));
  return {gamma, root1, x - root1};
}

QPoly surd_coords(const Scalar::Surd& s, const QPoly& root) {
  return QPoly::constant(s.a) + root * s.b;
}

}  // namespace

Scalar Scalar::floating(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite float scalar");
  return Scalar(Value(x));
}

Scalar Scalar::surd(const Rational& a, const Rational& b, const Integer& n) {
  if (sgn(n) < 0) throw DomainError("square root of a negative number");
  if (sgn(b) == 0 || sgn(n) == 0) return Scalar(a);
  auto [root, core] = square_decompose(n);
  if (core == 1) return Scalar(Rational(a + b * Rational(root)));
  return Scalar(Value(Surd{a, b * Rational(root), core}));
}

Scalar Scalar::sqrt(const Rational& x) {
  if (sgn(x) < 0) throw DomainError("square root of a negative number");
  return surd(Rational(0), Rational(1, x.get_den()), x.get_num() * x.get_den());
}

Scalar Scalar::from_root(const AlgebraicReal& r) {
  if (r.is_rational()) return Scalar(r.rational_value());
  if (r.minpoly.degree() == 2) return quadratic_root(r);
  AlgebraicReal g = refine(r, generator_width());
  if (g.is_rational()) return Scalar(g.rational_value());
  return Scalar(Value(Algebraic{std::make_shared<const AlgebraicReal>(g), QPoly::variable()}));
}

Scalar Scalar::in_field(Generator generator, const QPoly& coords) {
  if (generator->is_rational()) return Scalar(eval(coords, generator->rational_value()));
  QPoly c = coords % generator->minpoly;
  if (c.degree() <= 0) return Scalar(c.coeff(0));
  if (generator->minpoly.degree() == 2) {
    Scalar root = quadratic_root(*generator);
    return Scalar(c.coeff(0)) + Scalar(c.coeff(1)) * root;
  }
  return Scalar(Value(Algebraic{std::move(generator), c}));
}

const Rational& Scalar::rational() const {
  if (auto p = std::get_if<Rational>(&v_)) return *p;
  throw DomainError("scalar is not rational");
}

const Scalar::Surd& Scalar::surd() const {
  if (auto p = std::get_if<Surd>(&v_)) return *p;
  throw DomainError("scalar is not a quadratic surd");
}

const Scalar::Algebraic& Scalar::algebraic() const {
  if (auto p = std::get_if<Algebraic>(&v_)) return *p;
  throw DomainError("scalar is not an algebraic field element");
}

double Scalar::float_value() const {
  if (auto p = std::get_if<double>(&v_)) return *p;
  throw DomainError("scalar is not a float");
}

double Scalar::to_double() const {
  switch (kind()) {
    case Kind::Rational:
      return to_nearest_double(rational());
    case Kind::Float:
      return float_value();
    default: {
      auto [lo, hi] = enclosure(pow2_neg(64));
      return to_nearest_double((lo + hi) / 2);
    }
  }
}

int Scalar::sign() const {
  switch (kind()) {
    case Kind::Rational:
      return sgn(rational());
    case Kind::Float: {
      double x = float_value();
      return (x > 0) - (x < 0);
    }
    case Kind::Surd: {
      const Surd& s = surd();
      int sa = sgn(s.a), sb = sgn(s.b);
      if (sb == 0) return sa;
      if (sa == 0 || sa == sb) return sb;
      return sa * sgn(s.a * s.a - s.b * s.b * Rational(s.d));
    }
    case Kind::Algebraic:
      return sign_at(algebraic().coords, *algebraic().generator);
  }
  return 0;
}

std::pair<Rational, Rational> Scalar::enclosure(const Rational& width) const {
  switch (kind()) {
    case Kind::Rational:
      return {rational(), rational()};
    case Kind::Float: {
      Rational x = exact_from_double(float_value());
      return {x, x};
    }
    case Kind::Surd: {
      const Surd& s = surd();
      Rational w = width / (abs(s.b) + 1);
      auto [lo, hi] = sqrt_bounds(Rational(s.d), w);
      Rational x = s.a + s.b * lo, y = s.a + s.b * hi;
      if (x > y) std::swap(x, y);
      return {x, y};
    }
    case Kind::Algebraic: {
      const Algebraic& alg = algebraic();
      AlgebraicReal g = *alg.generator;
      while (true) {
        auto e = eval_interval(alg.coords, g.lo, g.hi);
        if (e.second - e.first <= width) return e;
        g = refine(g, (g.hi - g.lo) / 4);
        if (g.is_rational()) {
          Rational x = eval(alg.coords, g.rational_value());
          return {x, x};
        }
      }
    }
  }
  return {};
}

AlgebraicReal Scalar::to_algebraic_real() const {
  switch (kind()) {
    case Kind::Rational:
      return linear_root(rational());
    case Kind::Float:
      throw DomainError("exact input required");
    case Kind::Surd: {
      const Surd& s = surd();
      QPoly m = primitive(QPoly{s.a * s.a - s.b * s.b * Rational(s.d), -2 * s.a, Rational(1)});
      auto [lo, hi] = enclosure(min(abs(s.b), generator_width()));
      return AlgebraicReal{m, lo, hi};
    }
    case Kind::Algebraic: {
      const Algebraic& alg = algebraic();
      if (alg.coords == QPoly::variable()) return *alg.generator;
      QPoly chi = characteristic_polynomial(alg.coords, alg.generator->minpoly);
      auto roots = isolate_real_roots(chi, generator_width());
      Rational width = generator_width();
      while (true) {
        auto [lo, hi] = enclosure(width);
        const AlgebraicReal* hit = nullptr;
        int hits = 0;
        for (const auto& r : roots)
          if (!(r.hi < lo || r.lo > hi)) {
            hit = &r;
            ++hits;
          }
        if (hits == 1) return *hit;
        width /= 16;
        for (auto& r : roots) r = refine(r, width);
      }
    }
  }
  throw DomainError("unreachable scalar kind");
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case Kind::Rational:
      return pfsm::to_string(rational());
    case Kind::Float: {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, float_value());
      return std::string(buf, res.ptr);
    }
    case Kind::Surd: {
      const Surd& s = surd();
      std::string root = "sqrt(" + s.d.get_str() + ")";
      std::string out;
      if (sgn(s.a) != 0) out = pfsm::to_string(s.a);
      Rational mag = abs(s.b);
      if (sgn(s.b) < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (mag != 1) out += pfsm::to_string(mag) + "*";
      return out + root;
    }
    case Kind::Algebraic: {
      AlgebraicReal r = to_algebraic_real();
      return "root(" + pfsm::to_string(r.minpoly, "x") + "; [" + pfsm::to_string(r.lo) + "," + pfsm::to_string(r.hi) +
             "])";
    }
  }
  return {};
}

std::string Scalar::decimal(int digits) const {
  if (kind() == Kind::Rational) return to_decimal(rational(), digits);
  Rational width(Integer(1), Integer(10));
  mpz_pow_ui(width.get_den_mpz_t(), Integer(10).get_mpz_t(), static_cast<unsigned long>(digits + 4));
  width.canonicalize();
  auto [lo, hi] = enclosure(width);
  return to_decimal((lo + hi) / 2, digits);
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::Rational:
      return Scalar(Rational(-rational()));
    case Kind::Float:
      return floating(-float_value());
    case Kind::Surd:
      return Scalar(Value(Surd{-surd().a, -surd().b, surd().d}));
    case Kind::Algebraic:
      return Scalar(Value(Algebraic{algebraic().generator, -algebraic().coords}));
  }
  return {};
}

namespace {

enum class Op { Add, Sub, Mul, Div };

Rational apply(Op op, const Rational& x, const Rational& y) {
  switch (op) {
    case Op::Add:
      return x + y;
    case Op::Sub:
      return x - y;
    case Op::Mul:
      return x * y;
    case Op::Div:
      if (sgn(y) == 0) throw DomainError("division by zero");
      return x / y;
  }
  return 0;
}

}  // namespace

namespace detail {


Scalar field_op(Generator g, const QPoly& a, const QPoly& b, Op op) {
  switch (op) {
    case Op::Add:
      return Scalar::in_field(g, a + b);
    case Op::Sub:
      return Scalar::in_field(g, a - b);
    case Op::Mul:
      return Scalar::in_field(g, (a * b) % g->minpoly);
    case Op::Div: {
      QPoly bb = b % g->minpoly;
      if (bb.is_zero()) throw DomainError("division by zero");
      QPoly common = gcd(bb, g->minpoly);
      if (common.degree() >= 1) {
        // The generator's polynomial splits; keep the factor carrying alpha.
        if (has_root_in(common, g->lo, g->hi)) throw DomainError("division by zero");
        QPoly reduced = primitive(g->minpoly / common);
        g = std::make_shared<const AlgebraicReal>(AlgebraicReal{reduced, g->lo, g->hi});
        if (reduced.degree() == 1) g = std::make_shared<const AlgebraicReal>(linear_root(-reduced.coeff(0) / reduced.coeff(1)));
        if (g->is_rational()) return Scalar(Rational(eval(a, g->rational_value()) / eval(b, g->rational_value())));
        bb = b % g->minpoly;
      }
      return Scalar::in_field(g, (a * inverse_mod(bb, g->minpoly)) % g->minpoly);
    }
  }
  return {};
}

}  // namespace detail

namespace {

Scalar combine(const Scalar& x, const Scalar& y, Op op) {
  using K = Scalar::Kind;
  K kx = x.kind(), ky = y.kind();
  if (kx == K::Float || ky == K::Float) {
    if (kx != ky) mixing_error();
    double a = x.float_value(), b = y.float_value();
    switch (op) {
      case Op::Add:
        return Scalar::floating(a + b);
      case Op::Sub:
        return Scalar::floating(a - b);
      case Op::Mul:
        return Scalar::floating(a * b);
      case Op::Div:
        if (b == 0.0) throw DomainError("division by zero");
        return Scalar::floating(a / b);
    }
  }
  if (kx == K::Rational && ky == K::Rational) return Scalar(apply(op, x.rational(), y.rational()));

  if (kx == K::Algebraic || ky == K::Algebraic) {
    if (kx == K::Surd || ky == K::Surd)
      throw DomainError("values from different algebraic extensions cannot be combined");
    Generator g;
    QPoly a, b;
    if (kx == K::Algebraic && ky == K::Algebraic) {
      auto u = unify(x.algebraic().generator, y.algebraic().generator);
      if (!u) throw DomainError("values from different algebraic extensions cannot be combined");
      g = *u;
      a = x.algebraic().coords;
      b = y.algebraic().coords;
    } else if (kx == K::Algebraic) {
      g = x.algebraic().generator;
      a = x.algebraic().coords;
      b = QPoly::constant(y.rational());
    } else {
      g = y.algebraic().generator;
      a = QPoly::constant(x.rational());
      b = y.algebraic().coords;
    }
    return detail::field_op(g, a, b, op);
  }

  // Surds, possibly with a rational operand or different radicands.
  Scalar::Surd s{0, 0, 0}, t{0, 0, 0};
  if (kx == K::Surd) s = x.surd();
  if (ky == K::Surd) t = y.surd();
  if (kx == K::Rational) s = {x.rational(), 0, t.d};
  if (ky == K::Rational) t = {y.rational(), 0, s.d};
  if (s.d != t.d) {
    CompositeField f = composite_field(s.d, t.d);
    return detail::field_op(f.gamma, surd_coords(s, f.root1), surd_coords(t, f.root2), op);
  }
  const Rational d(s.d);
  switch (op) {
    case Op::Add:
      return Scalar::surd(s.a + t.a, s.b + t.b, s.d);
    case Op::Sub:
      return Scalar::surd(s.a - t.a, s.b - t.b, s.d);
    case Op::Mul:
      return Scalar::surd(s.a * t.a + s.b * t.b * d, s.a * t.b + s.b * t.a, s.d);
    case Op::Div: {
      Rational norm = t.a * t.a - t.b * t.b * d;
      if (sgn(norm) == 0) throw DomainError("division by zero");
      return Scalar::surd((s.a * t.a - s.b * t.b * d) / norm, (s.b * t.a - s.a * t.b) / norm, s.d);
    }
  }
  return {};
}

// Whether x - y can be formed without leaving the supported arithmetic.
bool same_domain(const Scalar& x, const Scalar& y) {
  using K = Scalar::Kind;
  K kx = x.kind(), ky = y.kind();
  if (kx == K::Rational || ky == K::Rational) return true;
  if (kx == K::Surd && ky == K::Surd) return x.surd().d == y.surd().d;
  if (kx == K::Algebraic && ky == K::Algebraic) return x.algebraic().generator == y.algebraic().generator;
  return false;
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Add); }
Scalar operator-(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Sub); }
Scalar operator*(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Mul); }
Scalar operator/(const Scalar& x, const Scalar& y) { return combine(x, y, Op::Div); }

int compare(const Scalar& x, const Scalar& y) {
  if (x.is_exact() != y.is_exact()) mixing_error();
  if (!x.is_exact()) {
    double a = x.float_value(), b = y.float_value();
    return (a > b) - (a < b);
  }
  if (same_domain(x, y)) return (x - y).sign();
  return compare(x.to_algebraic_real(), y.to_algebraic_real());
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_exact() != y.is_exact()) return false;
  return compare(x, y) == 0;
}

bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

int sign_at(const QPoly& p, const Scalar& x) {
  switch (x.kind()) {
    case Scalar::Kind::Float:
      throw DomainError("exact input required");
    case Scalar::Kind::Rational:
      return sign_at(p, x.rational());
    case Scalar::Kind::Surd:
      return p.evaluate(x).sign();
    case Scalar::Kind::Algebraic: {
      const auto& alg = x.algebraic();
      return sign_at(compose(p, alg.coords) % alg.generator->minpoly, *alg.generator);
    }
  }
  return 0;
}

bool as_rational_poly(const SPoly& p, QPoly& out) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) {
    if (!x.is_rational()) return false;
    c.push_back(x.rational());
  }
  out = QPoly(std::move(c));
  return true;
}

SPoly to_spoly(const QPoly& p) {
  std::vector<Scalar> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return SPoly(std::move(c));
}

std::string to_string(const SPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (int i = p.degree(); i >= 0; --i) {
    const Scalar& x = c[i];
    if (x.is_zero()) continue;
    std::string term = x.to_string();
    bool simple = x.is_rational() || !x.is_exact();
    bool negative = simple && x.sign() < 0;
    if (negative) term = term.substr(1);
    if (!simple) term = "(" + term + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string piece;
    if (i == 0)
      piece = term;
    else if (simple && term == "1")
      piece = mono;
    else
      piece = term + "*" + mono;
    if (negative)
      out += "-" + piece;
    else
      out += (out.empty() ? "" : "+") + piece;
  }
  return out;
}

}  // namespace pfsm

namespace pfsm {

namespace {

// Sign of u + sqrt(d) v from the signs of u, v and of the norm u^2 - d v^2.
int surd_sign(int su, int sv, int snorm) {
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  return su * snorm;
}

int split_sign_at(const QuadraticSplit& s, const AlgebraicReal& x) {
  int su = sign_at(s.a, x), sv = sign_at(s.b, x);
  if (sv == 0 || su == 0 || su == sv) return surd_sign(su, sv, 0);
  return surd_sign(su, sv, sign_at(s.a * s.a - s.b * s.b * Rational(s.d), x));
}

QuadraticSplit derivative(const QuadraticSplit& s) { return {s.a.derivative(), s.b.derivative(), s.d}; }

}  // namespace

bool split_quadratic(const SPoly& p, QuadraticSplit& out) {
  std::vector<Rational> a, b;
  Integer d = 1;
  for (const auto& c : p.coefficients()) {
    switch (c.kind()) {
      case Scalar::Kind::Rational:
        a.push_back(c.rational());
        b.push_back(0);
        break;
      case Scalar::Kind::Surd:
        if (d != 1 && d != c.surd().d) return false;
        d = c.surd().d;
        a.push_back(c.surd().a);
        b.push_back(c.surd().b);
        break;
      default:
        return false;
    }
  }
  out = {QPoly(a), QPoly(b), d};
  return true;
}

int sign_at(const SPoly& p, const Scalar& x) {
  if (!x.is_exact()) throw DomainError("exact input required");
  QuadraticSplit s;
  if (!split_quadratic(p, s)) return p.evaluate(x).sign();
  if (s.b.is_zero()) return sign_at(s.a, x);
  if (x.is_rational() || (x.kind() == Scalar::Kind::Surd && x.surd().d == s.d)) return p.evaluate(x).sign();
  return split_sign_at(s, x.to_algebraic_real());
}

std::vector<ScalarRoot> real_roots(const SPoly& p) {
  if (p.is_zero()) throw DomainError("no root set: zero polynomial");
  std::vector<ScalarRoot> out;
  QuadraticSplit s;
  if (!split_quadratic(p, s)) {
    for (const auto& c : p.coefficients())
      if (!c.is_exact()) throw DomainError("exact input required");
    throw DomainError("exact roots over this algebraic extension are not supported; use --float");
  }
  if (s.b.is_zero()) {
    for (const auto& r : real_roots_with_multiplicity(s.a, default_isolation_width()))
      out.push_back({Scalar::from_root(r.root), r.multiplicity});
    return out;
  }
  // Roots of a + sqrt(d) b are among the roots of the norm a^2 - d b^2; at
  // such a root |a| = sqrt(d) |b|, so p vanishes iff a and b have opposite
  // signs (or both vanish).
  QPoly norm = s.a * s.a - s.b * s.b * Rational(s.d);
  for (const auto& beta : isolate_real_roots(norm, default_isolation_width())) {
    if (sign_at(s.a, beta) != -sign_at(s.b, beta)) continue;
    int mult = 1;
    QuadraticSplit dk = derivative(s);
    while (!(dk.a.is_zero() && dk.b.is_zero())) {
      if (split_sign_at(dk, beta) != 0) break;
      ++mult;
      dk = derivative(dk);
    }
    out.push_back({Scalar::from_root(beta), mult});
  }
  return out;
}

}  // namespace pfsm
