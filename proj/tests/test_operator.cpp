#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "helpers.hpp"
#include "pfsm/errors.hpp"
#include "pfsm/operator.hpp"

using namespace pfsm;
using testing::M;
using testing::P;
using testing::S;

namespace {

Potential word(const std::string& w, const std::string& lambda) {
  return Potential::scaled_word(parse_word(w), S(lambda));
}

}  // namespace

TEST_CASE("monodromies of the 3-periodic example") {
  Potential p = P("2,1/2,1/2");
  Scalar zero = S("0");
  CHECK(monodromy(p, zero, 0) == M("2", "3/4", "0", "1/2"));
  CHECK(monodromy(p, zero, 1) == M("2", "0", "-3/4", "1/2"));
  CHECK(monodromy(p, zero, 2) == M("1/2", "0", "0", "2"));
  CHECK(monodromy(p, zero, 2, true) == monodromy(p, zero, 2));
  CHECK(monodromy(p, zero, 0, true) == monodromy(p, zero, 1));
  CHECK(monodromy(p, zero, 1, true) == monodromy(p, zero, 0));
}

TEST_CASE("monodromies of the 5- and 9-periodic examples") {
  Scalar zero = S("0");
  Potential p5 = word("1,1,0,1,0", "sqrt(2)/2");
  CHECK(monodromy(p5, zero) == M("-sqrt(2)/2", "-1", "0", "-sqrt(2)"));
  CHECK(monodromy(p5, zero).trace().to_string() == "-3/2*sqrt(2)");
  // The reversed product that coincides with M^(0) starts at shift 2.
  CHECK(monodromy(p5, zero, 2, true) == monodromy(p5, zero));

  Potential p9 = word("1,1,0,1,0,1,0,1,1", "1/2");
  CHECK(monodromy(p9, zero, 0) == M("-1/2", "0", "0", "-2"));
  CHECK(monodromy(p9, zero, 1) == M("-2", "-3/4", "0", "-1/2"));

  Potential p1 = word("1,1,1,0,1,1,0,1,0", "sqrt(2)/2");
  CHECK(monodromy(p1, zero, 1) == M("-sqrt(2)/2", "2", "0", "-sqrt(2)"));
}

TEST_CASE("transfer matrices have determinant one") {
  Mat2 t = transfer_matrix(S("sqrt(3)"), S("1/2"));
  CHECK(t.det().to_string() == "1");
  CHECK(t == M("1/2-sqrt(3)", "-1", "1", "0"));
}

TEST_CASE("reversed potential gives the reversed product") {
  Potential p = P("1,-2/3,5,sqrt(2)");
  Scalar e = S("1/3");
  for (long j = 0; j < 4; ++j) CHECK(monodromy(p, e, j, true) == monodromy(p.shifted(j).reversed(), e));
}

TEST_CASE("trace polynomials of the textbook examples") {
  CHECK(to_string(trace_polynomial(P("-1,1")), "E") == "E^2-3");
  CHECK(to_string(trace_polynomial(P("0,1,0")), "E") == "E^3-E^2-3*E+1");
  CHECK(to_string(trace_polynomial(P("5")), "E") == "E-5");
}

TEST_CASE("determinant formula agrees with the product") {
  for (const char* text : {"2,1/2,1/2", "0,1,0", "-1,1", "7/3", "sqrt(2),0,sqrt(2)/2,1"}) {
    Potential p = P(text);
    Potential q = p.period() == 1 ? p.doubled() : p;
    for (const char* e : {"0", "1/2", "-3"}) CHECK(monodromy_via_determinants(p, S(e)) == monodromy(q, S(e)));
  }
}

TEST_CASE("section determinants against a dense floating-point oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> v;
    for (int i = 0; i < 6; ++i) v.push_back(Scalar(Rational(num(rng), 4)));
    Potential p(v);
    Scalar e(Rational(num(rng), 7));
    Scalar det = section_determinant(p, -2, 5, e);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
      a(i, i) = p.at(i - 2).to_double() - e.to_double();
      if (i + 1 < 8) a(i, i + 1) = a(i + 1, i) = 1;
    }
    double oracle = a.determinant();
    CHECK(det.to_double() == doctest::Approx(oracle).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("empty and degenerate sections") {
  Potential p = P("1,2");
  CHECK(section_determinant(p, 3, 2, S("0")).to_string() == "1");
  CHECK_THROWS_AS(finite_section(p, 3, 2), DomainError);
  CHECK(finite_section(p, -1, 1).size() == 3);
}

TEST_CASE("potential indexing and float demotion") {
  Potential p = P("1,2,3");
  CHECK(p.at(-1).to_string() == "3");
  CHECK(p.at(7).to_string() == "2");
  CHECK(p.shifted(1).to_string() == "2,3,1");
  CHECK(p.reversed().to_string() == "3,2,1");
  Potential f({S("1"), Scalar::floating(0.5)});
  CHECK_FALSE(f.exact());
  CHECK(f.at(0).kind() == Scalar::Kind::Float);
}
