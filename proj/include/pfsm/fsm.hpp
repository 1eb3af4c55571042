#pragma once

#include <string>
#include <vector>

#include "pfsm/operator.hpp"

namespace pfsm {

/// M_{2,1} != 0 or |M_{1,1}| > 1. Float entries use a relative zero
/// tolerance eps * max(1, max |entry|).
bool check_condition(const Mat2& m, double eps = 1e-9);

struct FsmReport {
  bool invertible_two_sided = false;
  Scalar trace_at_zero;
  std::vector<long> failing_forward_shifts;   // j with M^(j) failing
  std::vector<long> failing_reversed_shifts;  // j with M~^(j) failing
  bool applicable_two_sided = false;
  bool applicable_one_sided = false;
  std::vector<long> bad_left_residues;   // j mod K
  std::vector<long> bad_right_residues;  // (j - 1) mod K
  std::vector<std::string> warnings;
};

FsmReport fsm_report(const Potential& p, double eps = 1e-9);

enum class Simplicity { FsmSimpleHere, NotInvertibleHere, CounterexampleHere };

Simplicity is_fsm_simple_at(const Potential& p);

std::string to_string(Simplicity s);

}  // namespace pfsm
