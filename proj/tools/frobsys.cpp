#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frobsys/cli/scenario.hpp"
#include "frobsys/errors.hpp"

namespace {

bool write_report(const std::string& path, const frobsys::cli::Json& json) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write report to " << path << "\n";
    return false;
  }
  out << json.dump(2) << "\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobsys: Frobenius-trace computations over F_p driven by JSON scenarios"};
  app.require_subcommand(1);

  frobsys::cli::RunOptions options;
  std::string file, report, caps, suite_name;
  std::uint64_t seed = 0;
  bool print_json = false;
  std::string scenario_dir = frobsys::cli::default_scenario_dir().string();

  CLI::App* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("file", file, "Scenario JSON file")->required();
  run->add_option("--report", report, "Write the JSON report here");
  run->add_option("--caps", caps, "Resource caps, e.g. degree=64,steps=64,generators=512,q=256,levels=8");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "Seed for sampled jobs (overrides the file)");
  run->add_flag("--json", print_json, "Print the JSON report instead of the text report");

  CLI::App* suite = app.add_subcommand("suite", "Run a shipped scenario suite (paper-repro, smoke)");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--dir", scenario_dir, "Scenario corpus directory");
  suite->add_option("--report", report, "Write the JSON summary here");
  suite->add_option("--caps", caps, "Resource caps applied to every scenario");

  CLI11_PARSE(app, argc, argv);
  if (!caps.empty()) options.caps = caps;

  try {
    if (*run) {
      if (*seed_opt) options.seed = seed;
      auto r = frobsys::cli::run_scenario_file(file, options);
      if (print_json)
        std::cout << r.json.dump(2) << "\n";
      else
        std::cout << r.text;
      if (!report.empty() && !write_report(report, r.json)) return 2;
      return r.success ? 0 : 1;
    }
    auto r = frobsys::cli::run_suite(suite_name, scenario_dir, options);
    std::cout << r.text;
    if (!report.empty() && !write_report(report, r.json)) return 2;
    return r.success ? 0 : 1;
  } catch (const frobsys::Error& e) {
    std::cerr << e.kind() << " error: " << e.what() << "\n";
    return 2;
  }
}
