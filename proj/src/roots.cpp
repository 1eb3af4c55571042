#include "pfsm/roots.hpp"

#include <algorithm>
#include <optional>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

// Divides by a positive content so signs along the chain are preserved.
QPoly normalize_positive(const QPoly& p) {
  QPoly q = primitive(p);
  if (!p.is_zero() && sgn(q.leading()) != sgn(p.leading())) q = -q;
  return q;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

AlgebraicReal exact_root(const Rational& r) {
  return AlgebraicReal{QPoly{-r, Rational(1)}, r, r};
}

// Bisection isolation of the real roots of a squarefree polynomial. Roots hit
// exactly by a bisection point come back as degenerate rational roots.
std::vector<AlgebraicReal> isolate_squarefree(const QPoly& s, const Rational& width) {
  std::vector<AlgebraicReal> out;
  if (s.degree() < 1) return out;
  SturmSequence sturm(s);
  Rational bound = root_bound(s);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, sturm.count_real_roots()}};
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count >= 2) {
      Rational mid = (job.lo + job.hi) / 2;
      int left = sturm.count_roots(job.lo, mid);
      stack.push_back({mid, job.hi, job.count - left});
      stack.push_back({job.lo, mid, left});
      continue;
    }
    Rational lo = job.lo, hi = job.hi;
    if (sign_at(s, hi) == 0) {
      out.push_back(exact_root(hi));
      continue;
    }
    std::optional<Rational> hit;
    while (!hit && (hi - lo >= width || sign_at(s, lo) == 0)) {
      Rational mid = (lo + hi) / 2;
      if (sign_at(s, mid) == 0) {
        hit = mid;
        break;
      }
      if (sturm.count_roots(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    if (hit)
      out.push_back(exact_root(*hit));
    else
      out.push_back(AlgebraicReal{s, lo, hi});
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.lo < b.lo; });
  return out;
}

std::optional<std::vector<Integer>> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m > Integer("1000000000000")) return std::nullopt;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational round_to_grid(const Rational& x, const Integer& den) {
  Rational scaled = x * den + Rational(1, 2);
  return Rational(floor(scaled), den);
}

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic real is not rational");
  auto c = minpoly.coefficients();
  return -c[0] / c[1];
}

SturmSequence::SturmSequence(const QPoly& squarefree) {
  if (squarefree.is_zero()) throw DomainError("Sturm sequence of zero polynomial");
  chain_.push_back(normalize_positive(squarefree));
  if (squarefree.degree() == 0) return;
  chain_.push_back(normalize_positive(squarefree.derivative()));
  while (chain_.back().degree() > 0) {
    QPoly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(normalize_positive(-r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign_at(p, x));
  return sign_changes(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return sign_changes(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return sign_changes(s);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

Rational default_isolation_width() { return Rational(Integer(1), Integer("1000000000000")); }

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw DomainError("no root set: zero polynomial");
  QPoly q = primitive(p);
  std::vector<Rational> roots;
  auto c = q.coefficients();
  std::size_t shift = 0;
  while (shift < c.size() && sgn(c[shift]) == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  if (q.degree() - static_cast<int>(shift) >= 1) {
    QPoly r(std::vector<Rational>(c.begin() + shift, c.end()));
    Integer lead = r.leading().get_num(), constant = r.coefficients()[0].get_num();
    auto nums = positive_divisors(constant);
    auto dens = positive_divisors(lead);
    if (nums && dens) {
      for (const auto& u : *nums)
        for (const auto& v : *dens)
          for (int s : {-1, 1}) {
            Rational cand(Integer(s * u), v);
            cand.canonicalize();
            if (cand.get_den() != v) continue;
            if (sign_at(r, cand) == 0) roots.push_back(cand);
          }
    } else {
      // Coefficients too large to factor: distinct rationals with denominator
      // dividing `lead` are at least 1/lead^2 apart, so a narrow isolating
      // interval contains at most one candidate, its simplest rational.
      Rational width(Integer(1), 2 * lead * lead);
      for (const auto& root : isolate_squarefree(squarefree_part(r), width)) {
        Rational cand = root.is_rational() ? root.rational_value() : simplest_between(root.lo, root.hi);
        if (abs(Integer(cand.get_den())) <= abs(lead) && sign_at(r, cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

AlgebraicReal refine(const AlgebraicReal& r, const Rational& width) {
  if (r.is_rational() || r.hi - r.lo < width) return r;
  Rational lo = r.lo, hi = r.hi;
  int s_lo = sign_at(r.minpoly, lo);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    int s = sign_at(r.minpoly, mid);
    if (s == 0) return exact_root(mid);
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicReal{r.minpoly, lo, hi};
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value());
  if (b.is_rational() && !a.is_rational()) return -compare(b, a);
  if (a.is_rational()) {
    Rational x = a.rational_value();
    AlgebraicReal r = b;
    while (true) {
      if (x < r.lo) return -1;
      if (x > r.hi) return 1;
      if (sign_at(r.minpoly, x) == 0) return 0;
      r = refine(r, (r.hi - r.lo) / 2);
      if (r.is_rational()) return cmp(x, r.rational_value());
    }
  }
  Rational lo = max(a.lo, b.lo), hi = min(a.hi, b.hi);
  if (lo <= hi) {
    QPoly g = gcd(a.minpoly, b.minpoly);
    if (g.degree() >= 1) {
      SturmSequence sturm(g);
      int inside = sturm.count_roots(lo, hi) + (sign_at(g, lo) == 0 ? 1 : 0);
      if (inside > 0) return 0;
    }
  }
  AlgebraicReal x = a, y = b;
  while (true) {
    if (x.hi < y.lo) return -1;
    if (y.hi < x.lo) return 1;
    x = refine(x, (x.hi - x.lo) / 2);
    y = refine(y, (y.hi - y.lo) / 2);
    if (x.is_rational() || y.is_rational()) return compare(x, y);
  }
}

std::vector<AlgebraicReal> isolate_real_roots(const QPoly& p, const Rational& width) {
  if (p.is_zero()) throw DomainError("no root set: zero polynomial");
  if (sgn(width) <= 0) throw DomainError("isolation width must be positive");
  QPoly s = squarefree_part(p);
  std::vector<AlgebraicReal> out;
  if (s.degree() < 1) return out;

  QPoly rest = s;
  for (const auto& r : rational_roots(s)) {
    out.push_back(exact_root(r));
    rest = primitive(rest / QPoly{-r, Rational(1)});
  }
  if (rest.degree() >= 2) {
    // Refine to a common width fine enough to recognise rational quadratic
    // factors from interval sums and products of root pairs.
    Integer lead = rest.leading().get_num();
    Rational bound = root_bound(rest);
    Rational grid_width = Rational(1) / (8 * Rational(lead) * (1 + 2 * bound));
    std::vector<AlgebraicReal> irr = isolate_squarefree(rest, min(width, grid_width));
    std::vector<bool> assigned(irr.size(), false);
    QPoly cofactor = rest;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      for (std::size_t j = i + 1; j < irr.size() && !assigned[i]; ++j) {
        if (assigned[j]) continue;
        Interval a{irr[i].lo, irr[i].hi}, b{irr[j].lo, irr[j].hi};
        Interval sum{a.lo + b.lo, a.hi + b.hi};
        Interval prod = mul(a, b);
        Rational s_cand = round_to_grid((sum.lo + sum.hi) / 2, lead);
        Rational t_cand = round_to_grid((prod.lo + prod.hi) / 2, lead);
        if (s_cand < sum.lo || s_cand > sum.hi || t_cand < prod.lo || t_cand > prod.hi) continue;
        QPoly quad{t_cand, -s_cand, Rational(1)};
        if (!(cofactor % quad).is_zero()) continue;
        QPoly prim = primitive(quad);
        irr[i].minpoly = prim;
        irr[j].minpoly = prim;
        assigned[i] = assigned[j] = true;
        cofactor = primitive(cofactor / quad);
      }
    }
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (!assigned[i]) irr[i].minpoly = cofactor;
      out.push_back(irr[i]);
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
  return out;
}

std::vector<RootWithMultiplicity> real_roots_with_multiplicity(const QPoly& p, const Rational& width) {
  std::vector<RootWithMultiplicity> out;
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (auto& r : isolate_real_roots(factors[i], width)) out.push_back({r, static_cast<int>(i) + 1});
  }
  std::sort(out.begin(), out.end(),
            [](const RootWithMultiplicity& a, const RootWithMultiplicity& b) { return compare(a.root, b.root) < 0; });
  return out;
}

}  // namespace pfsm

namespace pfsm {

int sign_at(const QPoly& p, const AlgebraicReal& x) {
  if (x.is_rational()) return sign_at(p, x.rational_value());
  QPoly r = p % x.minpoly;
  if (r.is_zero()) return 0;
  if (r.degree() == 0) return sgn(r.leading());
  QPoly g = gcd(x.minpoly, r);
  if (g.degree() >= 1 && SturmSequence(g).count_roots(x.lo, x.hi) > 0) return 0;
  AlgebraicReal y = x;
  while (true) {
    auto [lo, hi] = eval_interval(r, y.lo, y.hi);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    y = refine(y, (y.hi - y.lo) / 4);
    if (y.is_rational()) return sign_at(r, y.rational_value());
  }
}

}  // namespace pfsm
