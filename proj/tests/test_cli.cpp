#include <doctest.h>

#include <sstream>

#include "pfsm/cli.hpp"
#include "pfsm/report.hpp"

using namespace pfsm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum prints exact surd endpoints") {
  Result r = call({"spectrum", "--potential", "0,1,0", "--exact"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  auto bands = j["spectrum"]["bands"];
  REQUIRE(bands.size() == 3);
  CHECK(bands[1]["lo"]["value"] == "1-sqrt(2)");
  CHECK(bands[1]["lo"]["decimal"] == "-0.414213562373");
  CHECK(bands[2]["hi"]["value"] == "1+sqrt(2)");
}

TEST_CASE("fsm-check exit codes") {
  CHECK(call({"fsm-check", "--word", "1,1,0,1,0", "--lambda", "sqrt(2)/2", "--exact"}).code == kExitNotApplicable);
  CHECK(call({"fsm-check", "--potential", "3,-4"}).code == kExitApplicable);
  CHECK(call({"fsm-check", "--potential", "0,1,0"}).code == kExitNotInvertible);
  Result sym = call({"fsm-check", "--word", "1,1,0,1,0"});
  CHECK(sym.code == kExitNotApplicable);
  CHECK(Json::parse(sym.out)["m21_poly"] == "-2*lambda^2+1");
}

TEST_CASE("usage and domain errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"spectrum"}).code == kExitUsage);
  CHECK(call({"spectrum", "--potential", "1,", "--exact"}).code == kExitUsage);
  CHECK(call({"spectrum", "--potential", "0.1", "--exact"}).code == kExitUsage);
  CHECK(call({"spectrum", "--potential", "1", "--word", "1"}).code == kExitUsage);
  CHECK(call({"fsm-check", "--word", "1,2", "--lambda", "1"}).code == kExitUsage);
  CHECK(call({"sweep", "--word", "1,0", "--grid", "0:1"}).code == kExitUsage);
  CHECK(call({"probe", "--potential", "0,1", "--plan", "adapted", "--bad-left", "0,1"}).code == kExitDomain);
  Result r = call({"spectrum", "--potential", "1", "--format", "csv"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("error:") == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("search table reproduces the K = 3 rows") {
  Result r = call({"search", "--period", "3", "--format", "table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("(1,1,0)  [[lambda, 1], [lambda^2-1, lambda]]") != std::string::npos);
  CHECK(r.out.find("[[-lambda^3+2*lambda, -lambda^2+1], [lambda^2-1, lambda]]  -1, 1") != std::string::npos);
  CHECK(r.out.find("all FSM-simple") != std::string::npos);
}

TEST_CASE("sweep csv header") {
  Result r = call({"sweep", "--word", "1,1,0", "--grid", "0:1:4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("lambda,type,j,orientation,e_lo,e_hi\n", 0) == 0);
  CHECK(r.out.find("0.25,band,,,") != std::string::npos);
}

TEST_CASE("probe and solve outputs") {
  Result csv = call({"probe", "--potential", "2,1/2,1/2", "--sections", "5", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("n,l,r,sigma_min_inv,error\n", 0) == 0);
  Result j = call({"solve", "--potential", "3", "--sections", "10", "--rhs", "decay:1"});
  REQUIRE(j.code == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc["report"]["verdict"] == "stable");
  CHECK(doc["report"]["entries"].size() == 10);
  Result adapted = call({"probe", "--potential", "2,1/2,1/2", "--sections", "4", "--plan", "adapted"});
  Json a = Json::parse(adapted.out);
  CHECK(a["bad_left_residues"] == Json::array({2}));
  CHECK(a["bad_right_residues"] == Json::array({1}));
}

TEST_CASE("interlace") {
  Result r = call({"interlace", "--potential", "0,1,0", "--phi", "0.3"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["holds"] == true);
}

TEST_CASE("identical arguments give identical bytes") {
  std::vector<std::string> args{"search", "--period", "5", "--threads", "3"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("JSON documents read back") {
  Result r = call({"fsm-check", "--potential", "2,1/2,sqrt(2)"});
  FsmReport rep = fsm_report_from_json(Json::parse(r.out));
  CHECK(to_json(rep).dump() == Json::parse(r.out).dump());
  Result s = call({"spectrum", "--potential", "0,1,0"});
  BandSet b = bands_from_json(Json::parse(s.out)["spectrum"]);
  CHECK(to_json(b).dump() == Json::parse(s.out)["spectrum"].dump());
  Result f = call({"spectrum", "--potential", "0.5,1", "--float"});
  BandSet bf = bands_from_json(Json::parse(f.out)["spectrum"]);
  CHECK(bf.bands[0].lo.kind() == Scalar::Kind::Float);
  CHECK(to_json(bf).dump() == Json::parse(f.out)["spectrum"].dump());
}
