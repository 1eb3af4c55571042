#include <doctest.h>

#include "helpers.hpp"
#include "pfsm/fsm.hpp"

using namespace pfsm;
using testing::M;
using testing::P;
using testing::S;

namespace {

Potential word(const std::string& w, const std::string& lambda) {
  return Potential::scaled_word(parse_word(w), S(lambda));
}

using Longs = std::vector<long>;

}  // namespace

TEST_CASE("check condition") {
  CHECK(check_condition(M("1/2", "0", "1", "2")));
  CHECK(check_condition(M("2", "3/4", "0", "1/2")));
  CHECK_FALSE(check_condition(M("1/2", "0", "0", "2")));
  CHECK_FALSE(check_condition(M("1", "5", "0", "1")));
  CHECK_FALSE(check_condition(M("-1", "0", "0", "-1")));
  CHECK(check_condition(M("-sqrt(2)", "0", "0", "-sqrt(2)/2")));
  Mat2 f{Scalar::floating(0.5), Scalar::floating(0), Scalar::floating(1e-14), Scalar::floating(2)};
  CHECK_FALSE(check_condition(f));
}

TEST_CASE("three-periodic example") {
  FsmReport r = fsm_report(P("2,1/2,1/2"));
  CHECK(r.invertible_two_sided);
  CHECK(r.trace_at_zero.to_string() == "5/2");
  CHECK(r.failing_forward_shifts == Longs{2});
  CHECK(r.failing_reversed_shifts == Longs{2});
  CHECK_FALSE(r.applicable_two_sided);
  CHECK_FALSE(r.applicable_one_sided);
  CHECK(r.bad_left_residues == Longs{2});
  CHECK(r.bad_right_residues == Longs{1});
  CHECK(is_fsm_simple_at(P("2,1/2,1/2")) == Simplicity::CounterexampleHere);
}

TEST_CASE("five-periodic example") {
  FsmReport r = fsm_report(word("1,1,0,1,0", "1/sqrt(2)"));
  CHECK(r.invertible_two_sided);
  CHECK(compare(abs(r.trace_at_zero), S("3/sqrt(2)")) == 0);
  CHECK_FALSE(r.applicable_two_sided);
  CHECK(r.failing_forward_shifts == Longs{0});
  CHECK(r.failing_reversed_shifts == Longs{2});
}

TEST_CASE("nine-periodic example") {
  FsmReport r = fsm_report(word("1,1,0,1,0,1,0,1,1", "1/2"));
  CHECK(r.invertible_two_sided);
  CHECK(r.trace_at_zero.to_string() == "-5/2");
  CHECK_FALSE(r.applicable_two_sided);
  // M^(1) has a zero (2,1)-entry but |M11| = 2, so it passes.
  CHECK(r.failing_forward_shifts == Longs{0});
  CHECK(r.failing_reversed_shifts == Longs{0});
}

TEST_CASE("one-sided applicable but not two-sided") {
  Potential p = word("1,1,1,0,1,1,0,1,0", "1/sqrt(2)");
  FsmReport r = fsm_report(p);
  CHECK(r.invertible_two_sided);
  CHECK_FALSE(r.applicable_two_sided);
  CHECK(r.applicable_one_sided);
  CHECK(r.failing_reversed_shifts.empty());
  CHECK(std::find(r.failing_forward_shifts.begin(), r.failing_forward_shifts.end(), 1) !=
        r.failing_forward_shifts.end());
  // Anchoring the window one step earlier makes M^(0) fail.
  FsmReport moved = fsm_report(p.shifted(-1));
  CHECK_FALSE(moved.applicable_one_sided);
}

TEST_CASE("non-invertible operators are never applicable") {
  FsmReport r = fsm_report(P("0,1,0"));
  CHECK_FALSE(r.invertible_two_sided);
  CHECK_FALSE(r.applicable_two_sided);
  CHECK_FALSE(r.applicable_one_sided);
  CHECK(is_fsm_simple_at(P("0,1,0")) == Simplicity::NotInvertibleHere);
  CHECK(to_string(Simplicity::NotInvertibleHere) == "not_invertible_here");
}

TEST_CASE("simple integer examples") {
  CHECK(fsm_report(P("3")).applicable_two_sided);
  CHECK(fsm_report(P("3,-4")).applicable_two_sided);
  CHECK(is_fsm_simple_at(P("3,-4")) == Simplicity::FsmSimpleHere);
}

TEST_CASE("float potentials give the same verdicts away from ties") {
  for (const char* text : {"2,1/2,1/2", "3,-4", "1,5/2,-1/3,2"}) {
    FsmReport a = fsm_report(P(text));
    FsmReport b = fsm_report(P(text).to_float());
    CHECK(a.applicable_two_sided == b.applicable_two_sided);
    CHECK(a.failing_forward_shifts == b.failing_forward_shifts);
    CHECK(a.failing_reversed_shifts == b.failing_reversed_shifts);
  }
}
