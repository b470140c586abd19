#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "frobsys/ring.hpp"

namespace frobsys::cli {

using Json = nlohmann::ordered_json;

struct RunOptions {
  std::optional<std::uint64_t> seed;
  /// "degree=64,steps=64,generators=512,q=256,levels=8"; applied after the scenario header.
  std::optional<std::string> caps;
};

struct ScenarioReport {
  Json json;          // deterministic; golden tests compare this
  std::string text;   // human readable, includes wall times
  bool success = false;
};

/// Applies a "key=value,..." caps override to `base`.
Caps parse_caps(const std::string& text, Caps base);

/// Runs a scenario given as JSON text. Parse problems in the document are
/// reported as ParseError with line and column.
ScenarioReport run_scenario_text(const std::string& text, const std::string& name,
                                 const RunOptions& options = {});
ScenarioReport run_scenario_file(const std::filesystem::path& path, const RunOptions& options = {});

struct SuiteReport {
  Json json;
  std::string text;
  bool success = false;
};

/// Runs every scenario under <dir>/<name>/ in file-name order and tabulates
/// verdicts by criterion. Unknown names raise DomainError.
SuiteReport run_suite(const std::string& name, const std::filesystem::path& dir,
                      const RunOptions& options = {});

/// Directory holding the shipped scenario corpus.
std::filesystem::path default_scenario_dir();

}  // namespace frobsys::cli
