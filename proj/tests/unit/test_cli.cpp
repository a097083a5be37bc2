#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "perioknot/cli.hpp"
#include "perioknot/json_io.hpp"

using namespace perioknot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "perioknot");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("PERIOKNOT_EXAMPLES");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kKishino = "U1+ O2- O1+ U2- U3+ O4- O3+ U4-";

}  // namespace

TEST_CASE("parse") {
  const Result r = run({"parse", "O5+ U9+ O7+ U5+ O9+ U7+"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["code"] == kTrefoil);
  CHECK(j["writhe"] == 3);
  CHECK(run({"parse", "--text", "O1+ U1+"}).out == "O1+ U1+\n");
  CHECK(run({"parse", "O1+ U1-"}).code == kExitParse);
  CHECK(run({"parse", "O1+ Q1+"}).err.find("position 4") != std::string::npos);
}

TEST_CASE("present") {
  const Result r = run({"present", "--p", "3", kTrefoil});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["presentation"]["generators"].size() == 3);
  CHECK(j["presentation"]["relators"].size() == 3);
  CHECK(j["omega"].dump() == R"([["a1_2",1],["a1_0",1],["a1_1",1]])");
  CHECK(j["peripheral"]["longitude"].size() == 6);

  const Json kink = Json::parse(run({"present", "O1+ U1+"}).out);
  CHECK(kink["presentation"]["generators"].size() == 1);

  const Result bad = run({"present", "--p", "2", "O1+ U1+"});
  CHECK(bad.code == kExitNotPeriodic);
  CHECK(bad.err.find("not 2-periodic") != std::string::npos);

  CHECK(run({"present", "--text", "--p", "3", kTrefoil}).out.find("omega: a1_2 a1_0 a1_1") != std::string::npos);
}

TEST_CASE("quotient and symmetrize") {
  const Json q = Json::parse(run({"quotient", "--p", "3", kTrefoil}).out);
  CHECK(q.dump() == R"({"p":3,"code":"O1+ U1+","voltage":{"1":2}})");

  const Result s = run({"symmetrize", "--file", data("kink_voltage.json")});
  CHECK(s.code == kExitOk);
  const Json sj = Json::parse(s.out);
  CHECK(sj["n"] == 1);
  CHECK(equivalent_up_to_relabeling(parse_gauss(sj["code"].get<std::string>()), parse_gauss(kTrefoil)));

  CHECK(run({"symmetrize", R"({"p": 2, "code": "O1+ U1+"})", "--text"}).out == "O1+ U1+ O2+ U2+\n");
  CHECK(run({"symmetrize", "{not json"}).code == kExitParse);
  CHECK(run({"symmetrize", R"({"p": 2, "code": "U1+ O1+"})"}).code == kExitParse);

  const Result a = run({"symmetrize", "--random", "3", "--p", "4", "--seed", "9"});
  const Result b = run({"symmetrize", "--random", "3", "--p", "4", "--seed", "9"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["p"] == 4);

  CHECK(run({"quotient", kTrefoil}).code == kExitUsage);
}

TEST_CASE("certify exit codes") {
  const Result t = run({"certify", "--p", "3", "--dmax", "5", kTrefoil});
  CHECK(t.code == kExitOk);
  const Json tj = Json::parse(t.out);
  CHECK(tj["verdict"] == "consistent");
  CHECK(tj["warnings"].empty());

  const Result k = run({"certify", "--p", "2", kKishino});
  CHECK(k.code == kExitOk);
  const Json kj = Json::parse(k.out);
  CHECK(kj["warnings"][0].get<std::string>().rfind("hypothesis unverified", 0) == 0);

  CHECK(run({"certify", "--p", "3", "O1+ U2+ O3"}).code == kExitParse);
  CHECK(run({"certify", "--p", "2", kTrefoil}).code == kExitNotPeriodic);
  CHECK(run({"certify", "--p", "3", "--budget", "10", kTrefoil}).code == kExitResource);
  CHECK(run({"certify", "--p", "3", "--file", data("codes.txt")}).code == kExitOk);
  CHECK(run({"certify", "--p", "3", "--file", data("missing.txt")}).code == kExitUsage);
  CHECK(run({"certify", "--p", "3", "--file", data("codes.txt"), kTrefoil}).code == kExitUsage);
}

TEST_CASE("budget from the environment overrides the flag") {
  ::setenv("PERIOKNOT_BUDGET", "10", 1);
  const Result r = run({"certify", "--p", "3", "--budget", "10000000", kTrefoil});
  ::unsetenv("PERIOKNOT_BUDGET");
  CHECK(r.code == kExitResource);
  CHECK(Json::parse(r.out)["verdict"] == "incomplete");
}

TEST_CASE("alexander and torus") {
  CHECK(run({"alexander", "--text", kTrefoil}).out == "1 - t + t^2\n");
  CHECK(Json::parse(run({"alexander", kKishino}).out)["coefficients"].dump() == "[1]");

  const Json t23 = Json::parse(run({"torus", "2", "3"}).out);
  CHECK(t23["periods"].dump() == "[2,3]");
  CHECK(run({"torus", "--text", "3", "5"}).out == "3 5\n");
  CHECK(run({"torus", "4", "6"}).code == kExitTorus);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"parse"}).code == kExitUsage);
  CHECK(run({"parse", "--text", "--json", "O1+ U1+"}).code == kExitUsage);
  CHECK(run({"present", "--p", "1", kTrefoil}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
