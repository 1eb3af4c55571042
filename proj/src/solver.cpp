#include "pfsm/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

long wrap(long n, long k) {
  long r = n % k;
  return r < 0 ? r + k : r;
}

bool contains(const std::vector<long>& v, long x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<double> section_diagonal(const Potential& p, long l, long r) {
  std::vector<double> d;
  for (long n = l; n <= r; ++n) d.push_back(p.at(n).to_double());
  return d;
}

double inf_norm(const std::vector<double>& x) {
  double m = 0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double two_norm(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

std::vector<double> tridiagonal_apply(const std::vector<double>& d, const std::vector<double>& x) {
  std::size_t n = d.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = d[i] * x[i];
    if (i > 0) y[i] += x[i - 1];
    if (i + 1 < n) y[i] += x[i + 1];
  }
  return y;
}

double eigen_sigma_min(const std::vector<double>& diag) {
  std::size_t n = diag.size();
  if (n == 1) return std::abs(diag[0]);
  Eigen::VectorXd d(n), e(n - 1);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i];
  e.setOnes();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().minCoeff();
}

}  // namespace

CutoffPlan make_plan(PlanMode mode, long sections, long period, std::vector<long> bad_left,
                     std::vector<long> bad_right) {
  if (sections < 1) throw DomainError("need at least one section");
  if (period < 1) throw DomainError("period must be at least 1");
  CutoffPlan plan{mode, period, std::move(bad_left), std::move(bad_right), {}};
  for (auto* residues : {&plan.bad_left, &plan.bad_right}) {
    for (auto& r : *residues) r = wrap(r, period);
    std::sort(residues->begin(), residues->end());
    residues->erase(std::unique(residues->begin(), residues->end()), residues->end());
    if (static_cast<long>(residues->size()) >= period) throw DomainError("every residue is excluded; no admissible cut-off");
  }
  long l = 0, r = 0;
  for (long n = 1; n <= sections; ++n) {
    switch (mode) {
      case PlanMode::Symmetric:
        plan.sections.emplace_back(-n, n);
        break;
      case PlanMode::OneSided:
        plan.sections.emplace_back(0, n);
        break;
      case PlanMode::Adapted: {
        l = std::min(-n, l - 1);
        while (contains(plan.bad_left, wrap(l, period))) --l;
        r = std::max(n, r + 1);
        while (contains(plan.bad_right, wrap(r, period))) ++r;
        plan.sections.emplace_back(l, r);
        break;
      }
    }
  }
  return plan;
}

// Gaussian elimination with partial pivoting in the LAPACK gtsv layout: a row
// swap moves fill-in to the second superdiagonal du2.
TridiagonalLU::TridiagonalLU(const std::vector<double>& diagonal)
    : n_(diagonal.size()),
      d_(diagonal),
      du_(n_ > 0 ? n_ - 1 : 0, 1.0),
      du2_(n_ > 1 ? n_ - 2 : 0, 0.0),
      fact_(n_ > 0 ? n_ - 1 : 0, 0.0),
      swapped_(n_ > 0 ? n_ - 1 : 0, false) {
  if (n_ == 0) throw DomainError("empty section");
  std::vector<double> dl(n_ - 1, 1.0);
  min_pivot_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    if (std::abs(d_[i]) >= std::abs(dl[i])) {
      if (d_[i] == 0.0) {
        singular_ = true;
        min_pivot_ = 0;
        return;
      }
      fact_[i] = dl[i] / d_[i];
      d_[i + 1] -= fact_[i] * du_[i];
    } else {
      swapped_[i] = true;
      fact_[i] = d_[i] / dl[i];
      d_[i] = dl[i];
      double temp = d_[i + 1];
      d_[i + 1] = du_[i] - fact_[i] * temp;
      if (i + 2 < n_) {
        du2_[i] = du_[i + 1];
        du_[i + 1] = -fact_[i] * du2_[i];
      }
      du_[i] = temp;
    }
    min_pivot_ = std::min(min_pivot_, std::abs(d_[i]));
  }
  min_pivot_ = std::min(min_pivot_, std::abs(d_[n_ - 1]));
  if (d_[n_ - 1] == 0.0) singular_ = true;
}

std::vector<double> TridiagonalLU::solve(std::vector<double> b) const {
  if (singular_) throw DomainError("singular section: pivot 0");
  if (b.size() != n_) throw DomainError("right-hand side has the wrong length");
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    if (!swapped_[i]) {
      b[i + 1] -= fact_[i] * b[i];
    } else {
      double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - fact_[i] * b[i + 1];
    }
  }
  std::vector<double> x(n_);
  x[n_ - 1] = b[n_ - 1] / d_[n_ - 1];
  if (n_ >= 2) x[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * x[n_ - 1]) / d_[n_ - 2];
  if (n_ >= 3)
    for (std::size_t k = n_ - 2; k-- > 0;) x[k] = (b[k] - du_[k] * x[k + 1] - du2_[k] * x[k + 2]) / d_[k];
  return x;
}

std::vector<double> solve_section(const Potential& p, const std::vector<double>& rhs, long l, long r,
                                  std::vector<std::string>* warnings) {
  if (r < l) throw DomainError("empty section");
  if (rhs.size() != static_cast<std::size_t>(r - l + 1)) throw DomainError("right-hand side has the wrong length");
  std::vector<double> d = section_diagonal(p, l, r);
  TridiagonalLU lu(d);
  if (lu.singular()) throw DomainError("singular section [" + std::to_string(l) + "," + std::to_string(r) + "]: pivot 0");
  double scale = std::max(1.0, inf_norm(d) + 2.0);
  if (warnings && lu.min_pivot() < 1e-12 * scale)
    warnings->push_back("near-singular section [" + std::to_string(l) + "," + std::to_string(r) +
                        "]: smallest pivot " + std::to_string(lu.min_pivot()));
  std::vector<double> x = lu.solve(rhs);
  std::vector<double> res = tridiagonal_apply(d, x);
  for (std::size_t i = 0; i < res.size(); ++i) res[i] -= rhs[i];
  if (!(inf_norm(res) <= 1e-9 * inf_norm(rhs)))
    throw DomainError("numerically singular section [" + std::to_string(l) + "," + std::to_string(r) +
                      "]: smallest pivot " + std::to_string(lu.min_pivot()));
  return x;
}

double smallest_singular_value(const std::vector<double>& diagonal) {
  TridiagonalLU lu(diagonal);
  if (lu.singular()) return 0.0;
  std::size_t n = diagonal.size();
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  double nx = two_norm(x);
  for (auto& v : x) v /= nx;
  // The matrix is symmetric, so A^T A = A^2 and each step applies A^{-1}
  // twice. |A^{-1} x|^2 is the Rayleigh quotient of A^{-2} at the unit x.
  double estimate = 0;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    std::vector<double> half = lu.solve(x);
    double rq = two_norm(half);
    std::vector<double> y = lu.solve(half);
    double ny = two_norm(y);
    if (!std::isfinite(ny) || ny == 0.0 || rq == 0.0) break;
    double next = 1.0 / rq;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
    if (it > 0 && std::abs(next - estimate) <= 1e-6 * estimate) {
      estimate = next;
      converged = true;
      break;
    }
    estimate = next;
  }
  if (!converged) return eigen_sigma_min(diagonal);
  return estimate;
}

namespace {

void add_verdict(ConvergenceReport& rep) {
  long last_n = rep.entries.empty() ? 0 : rep.entries.back().n;
  double tail_max = 0;
  for (const auto& e : rep.entries) {
    if (2 * e.n <= last_n) continue;
    tail_max = std::max(tail_max, e.inverse_norm);
    if (e.inverse_norm > rep.ceiling) rep.witness.push_back(e.n);
  }
  rep.stable = tail_max < rep.ceiling;
  rep.notes.push_back("stability verdict is a heuristic: tail maximum of 1/sigma_min against the ceiling");
}

double inverse_norm_of(const Potential& p, long l, long r) {
  double s = smallest_singular_value(section_diagonal(p, l, r));
  return s > 0 ? 1.0 / s : std::numeric_limits<double>::infinity();
}

}  // namespace

ConvergenceReport stability_probe(const Potential& p, const CutoffPlan& plan, double ceiling) {
  ConvergenceReport rep;
  rep.ceiling = ceiling;
  long n = 0;
  for (const auto& [l, r] : plan.sections) {
    ++n;
    rep.entries.push_back({n, l, r, inverse_norm_of(p, l, r), std::numeric_limits<double>::quiet_NaN()});
  }
  add_verdict(rep);
  return rep;
}

ConvergenceReport convergence_study(const Potential& p, const RhsSpec& rhs, const CutoffPlan& plan, double ceiling) {
  ConvergenceReport rep;
  rep.ceiling = ceiling;
  long reach = 1;
  for (const auto& [l, r] : plan.sections) reach = std::max({reach, -l, r});
  long ref_l = plan.mode == PlanMode::OneSided ? 0 : -4 * reach;
  long ref_r = 4 * reach;
  auto rhs_at = [&](long i) {
    if (rhs.kind == RhsSpec::Kind::Unit) return i == rhs.index ? 1.0 : 0.0;
    return std::exp(-rhs.rate * std::abs(static_cast<double>(i)));
  };
  std::vector<double> b_ref;
  for (long i = ref_l; i <= ref_r; ++i) b_ref.push_back(rhs_at(i));
  std::vector<double> ref;
  try {
    ref = solve_section(p, b_ref, ref_l, ref_r);
  } catch (const DomainError& e) {
    throw DomainError(std::string("reference solve failed: ") + e.what());
  }
  long n = 0;
  for (const auto& [l, r] : plan.sections) {
    ++n;
    std::vector<double> b;
    for (long i = l; i <= r; ++i) b.push_back(rhs_at(i));
    double err;
    try {
      std::vector<double> x = solve_section(p, b, l, r, &rep.notes);
      err = 0;
      for (long i = l; i <= r; ++i)
        err = std::max(err, std::abs(x[static_cast<std::size_t>(i - l)] - ref[static_cast<std::size_t>(i - ref_l)]));
    } catch (const DomainError& e) {
      err = std::numeric_limits<double>::infinity();
      rep.notes.push_back(e.what());
    }
    rep.entries.push_back({n, l, r, inverse_norm_of(p, l, r), err});
  }
  add_verdict(rep);
  return rep;
}

std::string to_string(PlanMode m) {
  switch (m) {
    case PlanMode::Symmetric:
      return "symmetric";
    case PlanMode::OneSided:
      return "one_sided";
    case PlanMode::Adapted:
      return "adapted";
  }
  return "";
}

}  // namespace pfsm
