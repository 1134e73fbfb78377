// Copyright 2026 The mvcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Batch verification: a JSON config selects a family, truncation,
 * quadrature and checks; the runner produces a machine-readable report.
 * Runs are deterministic for a fixed seed; wall_time_ms is the only field
 * excluded from the determinism contract.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvcs/errors.hpp"

namespace mvcs {

struct SuiteConfig {
  std::string family = "canonical";
  std::map<std::string, double> family_params;  // validated per family
  std::vector<std::string> checks;              // empty = family defaults
  double tolerance = 1e-6;
  std::uint64_t seed = 42;
  std::string output_path;
};

/// Parses and validates a config document.  Unknown keys anywhere are hard
/// errors (ConfigError), as are unknown families, checks, or bad ranges.
SuiteConfig parse_config(const std::string& json_text);

struct CheckResult {
  std::string name;
  double defect = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::int64_t nodes_used = 0;
  double wall_time_ms = 0.0;
  double statistical_error = 0.0;
};

struct SuiteReport {
  std::string artifact_version;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

SuiteReport run_suite(const SuiteConfig& cfg);

enum class ReportFormat { json, csv };

/// JSON: one object, stable field order, reals with 17 significant digits.
/// CSV: fixed header, one row per check, RFC 4180 quoting.
std::string emit_report(const SuiteReport& rep, ReportFormat format);

void write_report_file(const SuiteReport& rep, ReportFormat format, const std::string& path);

const std::vector<std::string>& known_families();
const std::vector<std::string>& known_checks();
std::vector<std::string> default_checks(const std::string& family);

}  // namespace mvcs
