// ccrlab command line: scenario-driven verification runs plus thin wrappers
// around the individual computations (classification, index, cocycles,
// boundary, Fock calculus, exports).
//
// Exit codes: 0 all checks pass, 1 check failure, 2 parse/usage error,
// 3 inconclusive (a truncation-sensitive check reported Unstable).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ccrlab/report.hpp"

using namespace ccrlab;

namespace {

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(outPath);
  if (!out.good()) {
    std::cerr << "cannot write " << outPath << "\n";
    std::exit(2);
  }
  out << text << "\n";
}

int run_command(const std::string& configPath, const RunOptions& options,
                const std::string& outPath, bool csv) {
  ScenarioConfig config = load_scenario_config(configPath);
  ReportDoc doc = run_checks(config, options);
  emit(csv ? report_to_csv(doc.json) : doc.json.dump(2), outPath);
  return doc.exitCode;
}

int classify_command(const std::string& pathA, const std::string& pathB,
                     const std::string& outPath) {
  Scenario a = generate_family(load_scenario_config(pathA).scenario);
  Scenario b = generate_family(load_scenario_config(pathB).scenario);
  EquivalenceCert cert = equivalent(a, b);
  Json out;
  out["equivalent"] = cert.equivalent;
  out["hnfA"] = cert.hnfA;
  out["hnfB"] = cert.hnfB;
  if (cert.witness) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < cert.witness->size(); ++i)
      w.push_back((*cert.witness)[i].get_str());
    out["witness"] = w;
    out["spectrumA"] = to_string(cert.spectrumA);
    out["spectrumB"] = to_string(cert.spectrumB);
  }
  emit(out.dump(2), outPath);
  return 0;
}

int single_check(const std::string& configPath, const std::string& checkName,
                 const RunOptions& options, const std::string& outPath, bool csv) {
  ScenarioConfig config = load_scenario_config(configPath);
  config.checks = {checkName};
  ReportDoc doc = run_checks(config, options);
  emit(csv ? report_to_csv(doc.json) : doc.json.dump(2), outPath);
  return doc.exitCode;
}

int export_command(const std::string& configPath, const std::string& what,
                   const std::string& outPath) {
  ScenarioConfig config = load_scenario_config(configPath);
  Scenario scenario = generate_family(config.scenario);
  Grid grid = scenario.grid();

  if (what == "masks") {
    MemberMask mask = build_mask(scenario.pspace, grid);
    write_mask_cache(outPath.empty() ? scenario.name + ".mask" : outPath, grid, mask);
    return 0;
  }
  if (what == "matrices") {
    ShiftRep rep(scenario.pspace, grid, scenario.multiplicity);
    export_shift_csv(rep, scenario.generators().front(),
                     outPath.empty() ? scenario.name + "_shift.csv" : outPath);
    return 0;
  }
  if (what == "gram") {
    MemberMask mask = build_mask(scenario.pspace, grid);
    auto units = sample_units(scenario.dim(), scenario.multiplicity, 10, scenario.seed);
    CovMatrix cov = covariance(scenario.pspace, grid, mask, units, scenario.interior_point(0));
    Eigen::MatrixXcd gram = cov.gram();
    std::string text;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
      for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        if (j) text += ",";
        text += std::to_string(gram(i, j).real()) + "+" + std::to_string(gram(i, j).imag()) + "i";
      }
      text += "\n";
    }
    emit(text, outPath);
    return 0;
  }
  std::cerr << "unknown export target '" << what << "'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccrlab: exact cone/lattice scenarios for shift semigroup flows"};
  app.require_subcommand(1);

  std::string configPath, configPathB, outPath, what = "gram";
  RunOptions options;
  bool csv = false, json = true;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--out", outPath, "write output to a file instead of stdout");
    cmd->add_option("--threads", options.threads, "worker threads for grid and sampling loops");
    cmd->add_option("--window-scale", options.windowScale, "scale factor on window extents");
    cmd->add_flag("--verbose", options.verbose, "progress information on stderr");
    cmd->add_flag("--csv", csv, "CSV summary output");
    cmd->add_flag("--json", json, "JSON output (default)");
  };

  CLI::App* run = app.add_subcommand("run", "run the configured checks of a scenario");
  run->add_option("config", configPath, "scenario file")->required();
  addCommon(run);

  CLI::App* classify = app.add_subcommand("classify", "decide equivalence of two scenarios");
  classify->add_option("configA", configPath, "first scenario")->required();
  classify->add_option("configB", configPathB, "second scenario")->required();
  classify->add_option("--out", outPath, "write output to a file");

  for (const char* name : {"index", "cocycles", "boundary", "verify-fock"}) {
    CLI::App* cmd = app.add_subcommand(name, std::string("run the ") + name + " check only");
    cmd->add_option("config", configPath, "scenario file")->required();
    addCommon(cmd);
  }

  CLI::App* exportCmd = app.add_subcommand("export", "write masks/matrices/gram data");
  exportCmd->add_option("config", configPath, "scenario file")->required();
  exportCmd->add_option("--what", what, "gram | masks | matrices");
  exportCmd->add_option("--out", outPath, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return run_command(configPath, options, outPath, csv);
    if (classify->parsed()) return classify_command(configPath, configPathB, outPath);
    if (exportCmd->parsed()) return export_command(configPath, what, outPath);
    for (const char* name : {"index", "cocycles", "boundary"}) {
      CLI::App* cmd = app.get_subcommand(name);
      if (cmd->parsed()) return single_check(configPath, name, options, outPath, csv);
    }
    if (app.get_subcommand("verify-fock")->parsed())
      return single_check(configPath, "fock", options, outPath, csv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
