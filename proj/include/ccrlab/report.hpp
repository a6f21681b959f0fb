#pragma once

// Scenario check runner: executes the requested checks in dependency order
// and assembles a machine-readable report (schema "ccrlab-report/1"). Every
// record carries the mathematical claim it verifies, its status and metrics;
// reports are deterministic for a fixed config and seed up to the wall-time
// field.

#include <json.hpp>

#include "ccrlab/config.hpp"

namespace ccrlab {

using Json = nlohmann::ordered_json;

struct RunOptions {
  double windowScale = 1.0;
  int threads = 1;
  bool verbose = false;
};

struct ReportDoc {
  Json json;
  int exitCode;  // 0 pass, 1 failure, 3 unstable
};

ReportDoc run_checks(const ScenarioConfig& config, const RunOptions& options = {});

/// FNV-1a content hash used to identify scenario configs in reports.
std::string content_hash(const std::string& text);

std::string report_to_csv(const Json& report);

}  // namespace ccrlab
