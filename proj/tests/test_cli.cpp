#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "ccrlab/report.hpp"
#include "testutil.hpp"

using namespace ccrlab;
using namespace ccrlab::testutil;

namespace {

std::string scenario_path(const std::string& name) {
  return std::string(CCRLAB_SCENARIO_DIR) + "/" + name;
}

struct CommandResult {
  int exitCode;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(CCRLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 512> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), static_cast<int>(buffer.size()), pipe)) output += buffer.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("config parsing: values, defaults, strictness") {
  std::string text = R"(
name = "demo"
multiplicity = 2
seed = 99

[cone]
generators = [["1","1"],["1","-1"]]

[lattice]
basis = [["0","1"]]

[grid]
yLo = ["-1"]
yHi = ["4"]
h = "1/4"
M = 8
ladder = ["2","4","8","20"]

[expect]
index = 2
)";
  ScenarioConfig config = parse_scenario_config(text, "demo");
  CHECK(config.scenario.name == "demo");
  CHECK(config.scenario.multiplicity == 2);
  CHECK(config.scenario.seed == 99);
  CHECK(config.scenario.h == Rat(1, 4));
  CHECK(config.scenario.latticeBasis.cols() == 1);
  CHECK(config.checks == known_checks());
  REQUIRE(config.expect.index.has_value());
  CHECK(*config.expect.index == 2);
  CHECK(!config.expect.boundaryCompact.has_value());

  // decimal extents parse exactly
  ScenarioConfig decimals = parse_scenario_config(R"(
[cone]
generators = [["1","0"],["0","1"]]
[grid]
yLo = ["-0.5", "-0.5"]
yHi = [3.5, 3.5]
h = 0.25
)",
                                                  "decimals");
  CHECK(decimals.scenario.yLo == rv({Rat(-1, 2), Rat(-1, 2)}));
  CHECK(decimals.scenario.yHi == rv({Rat(7, 2), Rat(7, 2)}));
  CHECK(decimals.scenario.h == Rat(1, 4));

  // unknown keys and malformed input are rejected
  CHECK_THROWS_AS(parse_scenario_config("[cone]\ngenerators = [[\"1\"]]\nbogus = 1\n", "x"),
                  Error);
  CHECK_THROWS_AS(parse_scenario_config("[grid]\nyLo = [\"0\"]\n", "x"), Error);
  CHECK_THROWS_AS(parse_scenario_config("checks = [\"nonsense\"]\n[cone]\n", "x"), Error);
  CHECK_THROWS_AS(parse_scenario_config("key without value\n", "x"), Error);
}

TEST_CASE("bundled scenarios all parse") {
  for (const char* name :
       {"q2_rank1.toml", "q2_rank1_b.toml", "q2_rank1_c.toml", "q2_rank1_k2.toml",
        "q2_rank1_k3.toml", "q3_rank2.toml", "q3_rank2_b.toml", "q3_rank2_pyramid.toml",
        "q2_nolattice.toml", "q2_nolattice_wedge.toml", "q3_rank1.toml",
        "q3_rank1_pyramid.toml", "d1_halfline.toml"}) {
    ScenarioConfig config = load_scenario_config(scenario_path(name));
    Scenario scenario = generate_family(config.scenario);
    CHECK(scenario.dim() >= 1);
  }
}

TEST_CASE("run: exit codes and report shape") {
  // a fast check subset keeps this end-to-end test quick
  auto result = run_cli("run " + scenario_path("q2_rank1.toml"));
  CHECK(result.exitCode == 0);
  Json report = Json::parse(result.output);
  CHECK(report["schema"] == "ccrlab-report/1");
  CHECK(report["status"] == "pass");
  CHECK(report["checks"].size() == known_checks().size());
  for (const auto& record : report["checks"]) {
    CHECK(record["status"] == "pass");
    CHECK(!record["claim"].get<std::string>().empty());
  }

  // the noncompact scenario also passes: index 0 is its expected outcome
  auto flat = run_cli("run " + scenario_path("q2_nolattice.toml"));
  CHECK(flat.exitCode == 0);
  Json flatReport = Json::parse(flat.output);
  CHECK(flatReport["status"] == "pass");
  for (const auto& record : flatReport["checks"])
    if (record["name"] == "index") {
      CHECK(record["metrics"]["index"] == 0);
      CHECK(record["metrics"]["compactBoundary"] == false);
    }

  // malformed config: exit 2, no partial report
  std::string badPath = "bad_config_test.toml";
  std::ofstream bad(badPath);
  bad << "[cone]\ngenerators = [[\"1\",\"0\"],[\"0\",\"1\"]]\nunknown_key = 3\n";
  bad.close();
  auto parseFail = run_cli("run " + badPath);
  CHECK(parseFail.exitCode == 2);
  CHECK(parseFail.output.empty());
  std::remove(badPath.c_str());

  // a failing expectation: exit 1
  std::string failPath = "fail_config_test.toml";
  std::ofstream failing(failPath);
  failing << R"(
checks = ["boundary"]
[cone]
generators = [["1","1"],["1","-1"]]
[lattice]
basis = [["0","1"]]
[grid]
yLo = ["-1"]
yHi = ["4"]
h = "1/4"
M = 8
ladder = ["2","4","8","20"]
[expect]
boundary_compact = false
)";
  failing.close();
  auto checkFail = run_cli("run " + failPath);
  CHECK(checkFail.exitCode == 1);
  std::remove(failPath.c_str());
}

TEST_CASE("subcommands") {
  auto boundary = run_cli("boundary " + scenario_path("q3_rank1.toml"));
  CHECK(boundary.exitCode == 0);
  Json report = Json::parse(boundary.output);
  CHECK(report["checks"].size() == 1);
  CHECK(report["checks"][0]["name"] == "boundary");
  CHECK(report["checks"][0]["metrics"]["compact"] == false);

  auto classify =
      run_cli("classify " + scenario_path("q2_rank1.toml") + " " + scenario_path("q2_rank1_b.toml"));
  CHECK(classify.exitCode == 0);
  Json cert = Json::parse(classify.output);
  CHECK(cert["equivalent"] == false);
  CHECK(cert.contains("witness"));
  CHECK(cert["spectrumA"] != cert["spectrumB"]);

  auto same = run_cli("classify " + scenario_path("q2_rank1.toml") + " " +
                      scenario_path("q2_rank1.toml"));
  Json sameCert = Json::parse(same.output);
  CHECK(sameCert["equivalent"] == true);

  // CSV summary
  auto csv = run_cli("boundary " + scenario_path("q2_rank1.toml") + " --csv");
  CHECK(csv.exitCode == 0);
  CHECK(csv.output.rfind("check,status,claim", 0) == 0);
  CHECK(csv.output.find("boundary,pass") != std::string::npos);
}

TEST_CASE("export targets") {
  auto gram = run_cli("export " + scenario_path("q2_rank1.toml") + " --what gram");
  CHECK(gram.exitCode == 0);
  // K - 1 = 9 rows for the 10-unit Gram matrix
  int lines = 0;
  for (char c : gram.output) lines += (c == '\n');
  CHECK(lines == 9);

  auto mask = run_cli("export " + scenario_path("q2_rank1.toml") + " --what masks --out mask_cli.bin");
  CHECK(mask.exitCode == 0);
  ScenarioConfig config = load_scenario_config(scenario_path("q2_rank1.toml"));
  Scenario scenario = generate_family(config.scenario);
  Grid grid = scenario.grid();
  MemberMask loaded;
  REQUIRE(read_mask_cache("mask_cli.bin", grid, loaded));
  CHECK(loaded == build_mask(scenario.pspace, grid));
  std::remove("mask_cli.bin");

  auto matrices =
      run_cli("export " + scenario_path("q2_rank1.toml") + " --what matrices --out shift_cli.csv");
  CHECK(matrices.exitCode == 0);
  std::ifstream in("shift_cli.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "row,col,re,im");
  in.close();
  std::remove("shift_cli.csv");
}

TEST_CASE("determinism: identical runs produce identical reports") {
  ScenarioConfig config = load_scenario_config(scenario_path("q2_rank1.toml"));
  config.checks = {"boundary", "measure", "cocycles", "index"};
  ReportDoc first = run_checks(config);
  ReportDoc second = run_checks(config);
  first.json.erase("wallTimeMs");
  second.json.erase("wallTimeMs");
  CHECK(first.json.dump() == second.json.dump());
}
