#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hsymp/families.hpp"
#include "hsymp/report.hpp"
#include "oracle_helpers.hpp"

using namespace hsymp;

#ifndef HSYMP_CLI_PATH
#define HSYMP_CLI_PATH "hsymp"
#endif

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HSYMP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("cli_test_") + name;  // relative to the test working dir
}

}  // namespace

TEST_CASE("report content for the two-step family") {
  const auto data = kodaira_data({1});
  const PipelineResult res =
      run_verification(data.nabla(), data.nabla_prime(), data.omega());
  CHECK(res.input_valid);
  const ordered_json& r = res.report;
  CHECK(r["flatness"]["step"] == 2);
  CHECK(r["flatness"]["flat"] == true);
  CHECK(r["algebra"]["centre"]["dim"] == 4);
  CHECK(r["metric"]["signature"][0] == 4);
  CHECK(r["metric"]["signature"][1] == 4);
  CHECK(r["curvature"]["ricci_zero"] == true);
  CHECK(r["abelian"]["equivalent"] == true);
  CHECK(r["completeness"]["residuals_zero"] == true);
  CHECK(r["algebra"]["brackets"].size() == 2);
}

TEST_CASE("report for abelian input is all-trivial") {
  const PipelineResult res =
      run_verification(Connection(4), Connection(4), SymplecticForm::canonical(4));
  CHECK(res.input_valid);
  CHECK(res.report["flatness"]["step"] == 1);
  CHECK(res.report["flatness"]["flat"] == true);
  CHECK(res.report["algebra"]["brackets"].empty());
  CHECK(res.report["algebra"]["centre"]["dim"] == 8);
}

TEST_CASE("invalid data yields diagnostics instead of a full report") {
  std::vector<Rational> coeffs(4 * 4 * 4);
  coeffs[(0 * 4 + 0) * 4 + 1] = 1;
  const PipelineResult res = run_verification(Connection(4, std::move(coeffs)), Connection(4),
                                              SymplecticForm::canonical(4));
  CHECK(!res.input_valid);
  CHECK(res.report["validation"]["valid"] == false);
  CHECK(!res.report.contains("flatness"));
}

TEST_CASE("report serialization is byte-identical across runs") {
  const auto data = threestep_data({rat(1, 2), rat(2), rat(-1)});
  const PipelineResult a = run_verification(data.nabla(), data.nabla_prime(), data.omega());
  const PipelineResult b = run_verification(data.nabla(), data.nabla_prime(), data.omega());
  CHECK(a.report.dump(2) == b.report.dump(2));
}

TEST_CASE("cli exit codes and artifacts") {
  SUBCASE("verify-all on built-in examples exits zero") {
    CHECK(run_cli("verify-all --example threestep --a 0 --b 1 --c 0") == 0);
    CHECK(run_cli("verify-all --example kodaira --n 1") == 0);
  }
  SUBCASE("validate on a degenerate form exits one") {
    ordered_json j = data_to_json(Connection(2), Connection(2), SymplecticForm::canonical(2));
    j["omega"] = {{0, 0}, {0, 0}};
    const std::string path = tmp_path("degenerate.json");
    write_json_file(path, j);
    CHECK(run_cli("validate " + path) == 1);
  }
  SUBCASE("validate on data failing an identity exits one with diagnostics") {
    ordered_json j = data_to_json(Connection(2), Connection(2), SymplecticForm::canonical(2));
    j["nabla"][0][0][1] = 1;  // asymmetric
    const std::string path = tmp_path("asymmetric.json");
    write_json_file(path, j);
    CHECK(run_cli("validate " + path) == 1);
  }
  SUBCASE("missing file exits one") { CHECK(run_cli("validate does_not_exist.json") == 1); }
  SUBCASE("unknown example exits one") { CHECK(run_cli("verify-all --example nope") == 1); }
  SUBCASE("generated example files validate in a round trip") {
    const std::string path = tmp_path("family.json");
    CHECK(run_cli("example --example threestep --a 1/2 --b -2 --c 2 -o " + path) == 0);
    CHECK(run_cli("validate " + path) == 0);
    CHECK(run_cli("verify-all " + path) == 0);
  }
  SUBCASE("verify-all output files are byte-identical across runs") {
    const std::string p1 = tmp_path("rep1.json"), p2 = tmp_path("rep2.json");
    REQUIRE(run_cli("verify-all --example threestep --a 0 --b 1 --c 0 -o " + p1) == 0);
    REQUIRE(run_cli("verify-all --example threestep --a 0 --b 1 --c 0 -o " + p2) == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());
  }
  SUBCASE("geodesic writes the documented CSV header") {
    const std::string csv = tmp_path("traj.csv");
    REQUIRE(run_cli("geodesic --example kodaira --n 1 --a0 1,0,0,0 --b0 0,0,0,0 "
                    "--t-end 1 --step 1/100 -o " +
                    csv) == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,a_1,a_2,a_3,a_4,b_1,b_2,b_3,b_4");
    std::size_t lines = 1;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++lines;
    CHECK(lines == 102);  // header + 101 samples
  }
  SUBCASE("build exports the bracket table") {
    const std::string path = tmp_path("brackets.json");
    REQUIRE(run_cli("build --example kodaira --n 1 -o " + path) == 0);
    const ordered_json j = ordered_json::parse(slurp(path));
    CHECK(j["dim"] == 8);
    REQUIRE(j["brackets"].size() == 2);
    CHECK(j["brackets"][0]["i"] == 1);
    CHECK(j["brackets"][0]["j"] == 5);
    CHECK(j["brackets"][0]["coeffs"][5] == "1");
  }
  SUBCASE("coframe at the identity is the identity matrix") {
    const std::string path = tmp_path("coframe.json");
    REQUIRE(run_cli("coframe --example threestep --a 1 --b 2 --c 3 "
                    "--point 0,0,0,0,0,0,0,0 -o " +
                    path) == 0);
    const ordered_json j = ordered_json::parse(slurp(path));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t k = 0; k < 8; ++k)
        CHECK(j["coframe"][i][k] == (i == k ? "1" : "0"));
  }
}
