#pragma once

// Scenario configuration files: a strict TOML subset (tables, key = value,
// strings, bare numbers, booleans, nested arrays, # comments). Numeric
// entries are rational strings "p/q"; grid extents may also be decimal
// literals, parsed exactly. Unknown tables or keys are rejected.

#include <optional>
#include <string>

#include "ccrlab/classify.hpp"

namespace ccrlab {

struct Expectations {
  std::optional<bool> boundaryCompact;
  std::optional<int> cocycleDim;
  std::optional<int> index;
  std::optional<int> commutantDim;
  std::optional<double> growthSlope;  // checked within 5% relative
};

struct ScenarioConfig {
  ScenarioSpec scenario;
  std::vector<std::string> checks;
  Expectations expect;
  std::string rawText;  // canonical content, hashed into reports
};

/// Known check names, in dependency order.
const std::vector<std::string>& known_checks();

ScenarioConfig parse_scenario_config(const std::string& text, const std::string& sourceName);
ScenarioConfig load_scenario_config(const std::string& path);

}  // namespace ccrlab
