#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfsm/operator.hpp"

namespace pfsm {

enum class PlanMode { Symmetric, OneSided, Adapted };

/// Cut-off sequences (l_n, r_n), n = 1..N.
struct CutoffPlan {
  PlanMode mode = PlanMode::Symmetric;
  long period = 1;
  std::vector<long> bad_left;   // residues mod K avoided by l_n (adapted)
  std::vector<long> bad_right;  // residues mod K avoided by r_n (adapted)
  std::vector<std::pair<long, long>> sections;
};

/// Symmetric: [-n, n]. One-sided: [0, n]. Adapted: the first l <= -n and
/// r >= n (strictly beyond the previous cut-offs) whose residues are allowed.
CutoffPlan make_plan(PlanMode mode, long sections, long period, std::vector<long> bad_left = {},
                     std::vector<long> bad_right = {});

/// LU factorisation with partial pivoting of a symmetric tridiagonal matrix
/// with unit off-diagonals.
class TridiagonalLU {
 public:
  explicit TridiagonalLU(const std::vector<double>& diagonal);

  bool singular() const { return singular_; }
  double min_pivot() const { return min_pivot_; }
  std::vector<double> solve(std::vector<double> b) const;

 private:
  std::size_t n_;
  std::vector<double> d_, du_, du2_, fact_;
  std::vector<bool> swapped_;
  bool singular_ = false;
  double min_pivot_ = 0;
};

/// x with H_{l..r} x = rhs. Throws DomainError carrying the pivot magnitude
/// when the section is singular or the residual check fails.
std::vector<double> solve_section(const Potential& p, const std::vector<double>& rhs, long l, long r,
                                  std::vector<std::string>* warnings = nullptr);

/// Smallest singular value of the tridiagonal matrix with this diagonal and
/// unit off-diagonals: inverse iteration, eigenvalue fallback.
double smallest_singular_value(const std::vector<double>& diagonal);

struct ProbeEntry {
  long n;
  long l;
  long r;
  double inverse_norm;  // 1 / sigma_min, infinity when singular
  double error;         // convergence studies only; NaN otherwise
};

struct ConvergenceReport {
  std::vector<ProbeEntry> entries;
  double ceiling = 1e8;
  bool stable = true;
  std::vector<long> witness;  // n in the tail whose estimate exceeds the ceiling
  std::vector<std::string> notes;
};

ConvergenceReport stability_probe(const Potential& p, const CutoffPlan& plan, double ceiling = 1e8);

struct RhsSpec {
  enum class Kind { Unit, Decaying } kind = Kind::Unit;
  long index = 0;     // unit vector e_index
  double rate = 0.5;  // decaying profile exp(-rate |i|)
};

/// Errors against a reference solve on a section four times larger.
ConvergenceReport convergence_study(const Potential& p, const RhsSpec& rhs, const CutoffPlan& plan,
                                    double ceiling = 1e8);

std::string to_string(PlanMode m);

}  // namespace pfsm
