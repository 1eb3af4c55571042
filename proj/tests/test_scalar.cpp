#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pfsm/errors.hpp"
#include "pfsm/scalar.hpp"

using namespace pfsm;
using testing::S;

TEST_CASE("rational arithmetic stays exact") {
  Scalar x = S("1/3") + S("1/6");
  CHECK(x.kind() == Scalar::Kind::Rational);
  CHECK(x.to_string() == "1/2");
  CHECK((S("-5/7") * S("7/5")).to_string() == "-1");
  CHECK_THROWS_AS(S("1") / S("0"), DomainError);
}

TEST_CASE("surds normalise and print canonically") {
  CHECK(S("sqrt(2)/2").to_string() == "1/2*sqrt(2)");
  CHECK(S("sqrt(8)").to_string() == "2*sqrt(2)");
  CHECK(S("sqrt(9)").kind() == Scalar::Kind::Rational);
  CHECK(S("1-sqrt(2)").to_string() == "1-sqrt(2)");
  CHECK((S("sqrt(2)") * S("sqrt(2)")).to_string() == "2");
  CHECK((S("1/sqrt(2)") - S("sqrt(2)/2")).is_zero());
  CHECK((S("1+sqrt(3)") / S("1-sqrt(3)")).to_string() == "-2-sqrt(3)");
}

TEST_CASE("different radicands combine in a composite field") {
  Scalar x = S("sqrt(2)") + S("sqrt(3)");
  CHECK(x.kind() == Scalar::Kind::Algebraic);
  CHECK(x.to_double() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-14));
  Scalar y = x * x - S("5");  // 2*sqrt(6), held in the same field as x
  CHECK((y * y).is_rational());
  CHECK((y * y).to_string() == "24");
  CHECK(compare(x, S("22/7")) > 0);
}

TEST_CASE("comparison is exact across kinds") {
  CHECK(compare(S("sqrt(2)"), S("99/70")) < 0);
  CHECK(compare(S("sqrt(2)"), S("140/99")) > 0);
  CHECK(compare(S("sqrt(2)"), S("1414213562373095/1000000000000000")) > 0);
  CHECK(compare(S("-sqrt(5)"), S("-sqrt(5)")) == 0);
  CHECK(S("3/2*sqrt(2)").sign() == 1);
  CHECK(S("1-sqrt(2)").sign() == -1);
}

TEST_CASE("float and exact values do not mix silently") {
  CHECK_THROWS_AS(Scalar::floating(0.5) + S("1/2"), DomainError);
  CHECK((Scalar::floating(0.5) + S("1/2").to_float()).float_value() == 1.0);
}

TEST_CASE("parser modes") {
  CHECK(parse_scalar("0.25").kind() == Scalar::Kind::Float);
  CHECK(parse_scalar("0.25", NumberMode::Exact).to_string() == "1/4");
  CHECK_THROWS_AS(parse_scalar("0.1", NumberMode::Exact), ParseError);
  CHECK(parse_scalar("sqrt(2)/2", NumberMode::Float).kind() == Scalar::Kind::Float);
  CHECK(parse_scalar("-(1+2)*3").to_string() == "-9");
  CHECK(parse_scalar("1e-3").float_value() == 1e-3);
  CHECK(parse_scalar("0.30000000000000004").float_value() == 0.1 + 0.2);
  CHECK(parse_scalar("007").to_string() == "7");
  CHECK_THROWS_AS(parse_scalar("1/"), ParseError);
  CHECK_THROWS_AS(parse_scalar("sqrt(-2)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2 3"), ParseError);
}

TEST_CASE("isolated roots parse and normalise") {
  Scalar r = parse_scalar("root(x^5+2*x^3-1; [0,1])");
  CHECK(r.kind() == Scalar::Kind::Algebraic);
  CHECK(r.to_double() == doctest::Approx(0.733156856461).epsilon(1e-11));
  Scalar q = parse_scalar("root(2*x^2-1; [0,1])");
  CHECK(q.to_string() == "1/2*sqrt(2)");
  CHECK_THROWS_AS(parse_scalar("root(x^2-2; [-2,2])"), ParseError);
}

TEST_CASE("canonical strings round-trip through the parser") {
  for (const char* text : {"3", "-5/7", "1/2*sqrt(2)", "1-sqrt(2)", "-2-3/5*sqrt(7)"}) {
    Scalar x = S(text);
    Scalar y = S(x.to_string());
    CHECK(compare(x, y) == 0);
    CHECK(y.to_string() == x.to_string());
  }
  Scalar a = parse_scalar("root(x^3-x-1; [1,2])");
  CHECK(compare(parse_scalar(a.to_string(), NumberMode::Exact), a) == 0);
}

TEST_CASE("decimal rendering") {
  CHECK(S("1/3").decimal(5) == "0.33333");
  CHECK(S("-sqrt(2)").decimal(6) == "-1.414214");
}
