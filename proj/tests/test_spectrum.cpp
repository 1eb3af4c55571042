#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pfsm/spectrum.hpp"

using namespace pfsm;
using testing::P;
using testing::S;

namespace {

void check_bands(const BandSet& s, const std::vector<std::pair<std::string, std::string>>& expected) {
  REQUIRE(s.bands.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(compare(s.bands[i].lo, S(expected[i].first)) == 0);
    CHECK(compare(s.bands[i].hi, S(expected[i].second)) == 0);
  }
}

}  // namespace

TEST_CASE("constant potential has one band") {
  check_bands(spectrum_bands(P("3/2")), {{"-1/2", "7/2"}});
  check_bands(spectrum_bands(P("sqrt(2)")), {{"sqrt(2)-2", "sqrt(2)+2"}});
}

TEST_CASE("two-periodic bands") {
  check_bands(spectrum_bands(P("-1,1")), {{"-sqrt(5)", "-1"}, {"1", "sqrt(5)"}});
  // General closed form with delta = sqrt(16 + (v0 - v1)^2).
  check_bands(spectrum_bands(P("1/3,2")), {{"7/6-1/6*sqrt(169)", "1/3"}, {"2", "7/6+1/6*sqrt(169)"}});
  check_bands(spectrum_bands(P("0,3")), {{"3/2-5/2", "0"}, {"3", "3/2+5/2"}});
}

TEST_CASE("three-periodic bands") {
  BandSet s = spectrum_bands(P("0,1,0"));
  check_bands(s, {{"-sqrt(3)", "-1"}, {"1-sqrt(2)", "1"}, {"sqrt(3)", "1+sqrt(2)"}});
  CHECK(s.bands[1].lo.to_string() == "1-sqrt(2)");
}

TEST_CASE("touching bands are merged only on request") {
  BandSet s = spectrum_bands(P("0,0"));
  check_bands(s, {{"-2", "0"}, {"0", "2"}});
  BandSet m = merge_touching(s);
  check_bands(m, {{"-2", "2"}});
  REQUIRE(m.merged.size() == 1);
  CHECK(m.merged[0]);
}

TEST_CASE("float bands agree with exact bands") {
  for (const char* text : {"0,1,0", "-1,1", "2,1/2,1/2", "1,0,-1,3/2", "5"}) {
    Potential p = P(text);
    BandSet exact = spectrum_bands(p);
    BandSet approx = spectrum_bands(p.to_float());
    REQUIRE(exact.bands.size() == approx.bands.size());
    for (std::size_t i = 0; i < exact.bands.size(); ++i) {
      CHECK(approx.bands[i].lo.to_double() == doctest::Approx(exact.bands[i].lo.to_double()).epsilon(1e-10));
      CHECK(approx.bands[i].hi.to_double() == doctest::Approx(exact.bands[i].hi.to_double()).epsilon(1e-10));
    }
  }
}

TEST_CASE("one-sided spectrum of (0,1,0)") {
  OneSidedSpectrum s = one_sided_spectrum(P("0,1,0"));
  REQUIRE(s.dirichlet.size() == 1);
  CHECK(compare(s.dirichlet[0].energy, S("-(sqrt(5)-1)/2")) == 0);
  REQUIRE(s.rejected.size() == 1);
  CHECK(compare(s.rejected[0], S("(1+sqrt(5))/2")) == 0);
}

TEST_CASE("two-periodic one-sided spectrum adds nothing") {
  for (const char* text : {"-1,1", "1/3,2", "0,sqrt(2)"}) {
    OneSidedSpectrum s = one_sided_spectrum(P(text));
    CHECK(s.dirichlet.empty());
    REQUIRE(s.rejected.size() == 1);
    CHECK(compare(s.rejected[0], P(text).at(0)) == 0);
  }
}

TEST_CASE("invertibility from the trace at zero") {
  CHECK(is_invertible(P("2,1/2,1/2")).invertible);
  CHECK(is_invertible(P("2,1/2,1/2")).trace.to_string() == "5/2");
  CHECK_FALSE(is_invertible(P("0,1,0")).invertible);
  CHECK(is_invertible(P("3")).invertible);
  CHECK_FALSE(is_invertible(P("2")).invertible);
  CHECK(is_invertible(P("1/2,-1/2")).invertible);
  CHECK_FALSE(is_invertible(P("1,1")).invertible);
}

TEST_CASE("Dirichlet candidates are eigenvalues of the truncated section") {
  auto c = dirichlet_candidates(P("0,1,0"));
  REQUIRE(c.size() == 2);
  CHECK(compare(c[0], S("1/2-1/2*sqrt(5)")) == 0);
  auto f = dirichlet_candidates(P("0,1,0").to_float());
  REQUIRE(f.size() == 2);
  CHECK(f[0].to_double() == doctest::Approx(c[0].to_double()).epsilon(1e-12));
}

// Reference values from numpy.linalg.eigvalsh on the dense Floquet matrix.
TEST_CASE("Floquet eigenvalues match an independent dense solver") {
  auto e0 = floquet_eigenvalues(P("0,1,0"), 0.0);
  REQUIRE(e0.size() == 3);
  CHECK(e0[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e0[1] == doctest::Approx(-0.4142135623730951).epsilon(1e-12));
  CHECK(e0[2] == doctest::Approx(2.414213562373095).epsilon(1e-12));
  auto epi = floquet_eigenvalues(P("0,1,0"), M_PI);
  CHECK(epi[0] == doctest::Approx(-1.7320508075688772).epsilon(1e-12));
  CHECK(epi[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(epi[2] == doctest::Approx(1.7320508075688767).epsilon(1e-12));
  auto e3 = floquet_eigenvalues(P("2,1/2,1/2"), 0.7);
  CHECK(e3[0] == doctest::Approx(-0.630489836285193).epsilon(1e-12));
  CHECK(e3[1] == doctest::Approx(0.4900554334544583).epsilon(1e-12));
  CHECK(e3[2] == doctest::Approx(3.140434402830735).epsilon(1e-12));
  auto e2 = floquet_eigenvalues(P("-1,1"), 1.3);
  CHECK(e2[0] == doctest::Approx(-1.880158944677065).epsilon(1e-12));
  CHECK(e2[1] == doctest::Approx(1.880158944677065).epsilon(1e-12));
}

TEST_CASE("band edges are periodic and antiperiodic eigenvalues") {
  Potential p = P("0,1,0");
  BandSet s = spectrum_bands(p);
  std::vector<double> edges;
  for (double e : floquet_eigenvalues(p, 0.0)) edges.push_back(e);
  for (double e : floquet_eigenvalues(p, M_PI)) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < s.bands.size(); ++i) {
    CHECK(edges[2 * i] == doctest::Approx(s.bands[i].lo.to_double()).epsilon(1e-12));
    CHECK(edges[2 * i + 1] == doctest::Approx(s.bands[i].hi.to_double()).epsilon(1e-12));
  }
}

TEST_CASE("interlacing on the textbook examples") {
  for (const char* text : {"0,1,0", "2,1/2,1/2", "-1,1", "4"})
    for (double phi : {0.0, 1.0, M_PI}) CHECK(check_interlacing(P(text), phi).holds);
}

TEST_CASE("sweep rows") {
  auto rows = band_diagram_sweep({1, 1, 0}, {0.0, 0.5, 1.0}, true);
  std::size_t bands = 0;
  for (const auto& r : rows) {
    if (r.type == SweepRowType::Band) {
      ++bands;
      CHECK(r.e_lo <= r.e_hi);
      CHECK(r.shift == -1);
    } else {
      CHECK(r.e_lo == r.e_hi);
      CHECK(r.shift >= 0);
      CHECK(r.shift < 3);
    }
  }
  CHECK(bands == 9);
  auto only = band_diagram_sweep({1, 1, 0}, {0.5}, false);
  CHECK(only.size() == 3);
}
