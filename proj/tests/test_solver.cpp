#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "helpers.hpp"
#include "pfsm/errors.hpp"
#include "pfsm/solver.hpp"

using namespace pfsm;
using testing::P;

namespace {

Eigen::MatrixXd dense(const Potential& p, long l, long r) {
  long n = r - l + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    a(i, i) = p.at(l + i).to_double();
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = 1;
  }
  return a;
}

}  // namespace

TEST_CASE("plans") {
  CutoffPlan s = make_plan(PlanMode::Symmetric, 3, 3);
  CHECK(s.sections == std::vector<std::pair<long, long>>{{-1, 1}, {-2, 2}, {-3, 3}});
  CutoffPlan o = make_plan(PlanMode::OneSided, 2, 3);
  CHECK(o.sections == std::vector<std::pair<long, long>>{{0, 1}, {0, 2}});
  CutoffPlan a = make_plan(PlanMode::Adapted, 60, 3, {2}, {1});
  long prev_l = 1, prev_r = -1;
  long n = 0;
  for (const auto& [l, r] : a.sections) {
    ++n;
    CHECK(((l % 3) + 3) % 3 != 2);
    CHECK(((r % 3) + 3) % 3 != 1);
    CHECK(l <= -n);
    CHECK(r >= n);
    CHECK(l < prev_l);
    CHECK(r > prev_r);
    prev_l = l;
    prev_r = r;
  }
  CHECK_THROWS_AS(make_plan(PlanMode::Adapted, 3, 2, {0, 1}, {}), DomainError);
}

// Reference values from numpy.linalg on the dense matrix.
TEST_CASE("solves and singular values against a dense oracle") {
  Potential p = P("2,1/2,1/2");
  std::vector<double> rhs(21, 0.0);
  rhs[10] = 1.0;
  auto x = solve_section(p, rhs, -10, 10);
  CHECK(x[8] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(x[9] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x[10] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(x[11] == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> d;
  for (long i = -10; i <= 10; ++i) d.push_back(p.at(i).to_double());
  CHECK(smallest_singular_value(d) == doctest::Approx(0.004622935058031639).epsilon(1e-6));
}

TEST_CASE("random sections against Eigen") {
  for (const char* text : {"3", "-1,1", "1/3,-2,5/2,1", "2,1/2,1/2"}) {
    Potential p = P(text);
    for (long n : {1L, 2L, 5L, 17L}) {
      Eigen::MatrixXd a = dense(p, -n, n + 1);
      Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(a.rows(), -1.0, 2.0);
      std::vector<double> rhs(b.data(), b.data() + b.size());
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
      double smin = svd.singularValues().minCoeff();
      if (smin < 1e-10) continue;
      Eigen::VectorXd expect = a.fullPivLu().solve(b);
      auto x = solve_section(p, rhs, -n, n + 1);
      for (long i = 0; i < a.rows(); ++i) CHECK(x[i] == doctest::Approx(expect[i]).epsilon(1e-9).scale(1.0));
      std::vector<double> d;
      for (long i = -n; i <= n + 1; ++i) d.push_back(p.at(i).to_double());
      CHECK(smallest_singular_value(d) == doctest::Approx(smin).epsilon(1e-5));
    }
  }
}

TEST_CASE("singular sections are reported") {
  Potential p = P("0");
  std::vector<double> rhs(3, 1.0);
  // The 3x3 zero-diagonal section has eigenvalues 0, +-sqrt(2).
  CHECK_THROWS_AS(solve_section(p, rhs, 0, 2), DomainError);
  CHECK(smallest_singular_value({0.0, 0.0, 0.0}) < 1e-12);
}

TEST_CASE("convergence for invertible simple potentials") {
  for (const char* text : {"3", "-1,1"}) {
    Potential p = P(text);
    ConvergenceReport r = convergence_study(p, RhsSpec{}, make_plan(PlanMode::Symmetric, 100, p.period()));
    CHECK(r.stable);
    CHECK(r.entries.back().error < 1e-8);
    for (const auto& e : r.entries) CHECK(e.inverse_norm <= 10.0);
  }
}

TEST_CASE("instability of the 3-periodic example and its adapted fix") {
  Potential p = P("2,1/2,1/2");
  ConvergenceReport sym = stability_probe(p, make_plan(PlanMode::Symmetric, 200, 3));
  double worst = 0;
  for (const auto& e : sym.entries) worst = std::max(worst, e.inverse_norm);
  CHECK(worst > 1e4);
  CHECK_FALSE(sym.stable);
  ConvergenceReport ad = stability_probe(p, make_plan(PlanMode::Adapted, 200, 3, {2}, {1}));
  for (const auto& e : ad.entries) CHECK(e.inverse_norm < 1e2);
  CHECK(ad.stable);
}
