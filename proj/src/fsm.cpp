#include "pfsm/fsm.hpp"

#include <algorithm>
#include <cmath>

#include "pfsm/errors.hpp"
#include "pfsm/spectrum.hpp"

namespace pfsm {

namespace {

bool near_zero_m21(const Mat2& m, double eps) {
  double scale = std::max({1.0, std::abs(m.m11.to_double()), std::abs(m.m12.to_double()),
                           std::abs(m.m21.to_double()), std::abs(m.m22.to_double())});
  return std::abs(m.m21.to_double()) <= eps * scale;
}

}  // namespace

bool check_condition(const Mat2& m, double eps) {
  if (!m.m21.is_exact()) {
    if (!near_zero_m21(m, eps)) return true;
    return std::abs(m.m11.to_double()) > 1.0;
  }
  if (!m.m21.is_zero()) return true;
  return (m.m11 * m.m11 - Scalar(1)).sign() > 0;
}

FsmReport fsm_report(const Potential& p, double eps) {
  FsmReport r;
  Invertibility inv = is_invertible(p);
  r.invertible_two_sided = inv.invertible;
  r.trace_at_zero = inv.trace;
  long k = static_cast<long>(p.period());
  Scalar zero = p.at(0).like(Rational(0));
  bool forward0_ok = true;
  for (long j = 0; j < k; ++j) {
    for (bool rev : {false, true}) {
      Mat2 m = monodromy(p, zero, j, rev);
      if (!m.m21.is_exact() && near_zero_m21(m, eps) && !m.m21.is_zero())
        r.warnings.push_back(std::string(rev ? "reversed" : "forward") + " shift " + std::to_string(j) +
                             ": M21 treated as zero within tolerance");
      if (check_condition(m, eps)) continue;
      if (rev) {
        r.failing_reversed_shifts.push_back(j);
        r.bad_right_residues.push_back(((j - 1) % k + k) % k);
      } else {
        r.failing_forward_shifts.push_back(j);
        r.bad_left_residues.push_back(j);
        if (j == 0) forward0_ok = false;
      }
    }
  }
  std::sort(r.bad_right_residues.begin(), r.bad_right_residues.end());
  r.applicable_two_sided =
      r.invertible_two_sided && r.failing_forward_shifts.empty() && r.failing_reversed_shifts.empty();
  r.applicable_one_sided = r.invertible_two_sided && forward0_ok && r.failing_reversed_shifts.empty();
  return r;
}

Simplicity is_fsm_simple_at(const Potential& p) {
  FsmReport r = fsm_report(p);
  if (!r.invertible_two_sided) return Simplicity::NotInvertibleHere;
  return r.applicable_two_sided ? Simplicity::FsmSimpleHere : Simplicity::CounterexampleHere;
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::FsmSimpleHere:
      return "fsm_simple_here";
    case Simplicity::NotInvertibleHere:
      return "not_invertible_here";
    case Simplicity::CounterexampleHere:
      return "counterexample_here";
  }
  return "";
}

}  // namespace pfsm
