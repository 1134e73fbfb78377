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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mvcs/suite.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 check failure, 2 config error,
// 3 internal error.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInternalError = 3;

int run_verify(const std::string& config_path, const std::string& format,
               const std::string& out_path, bool seed_given, std::uint64_t seed) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read config file '" << config_path << "'\n";
    return kExitConfigError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  mvcs::SuiteConfig cfg = mvcs::parse_config(buf.str());
  if (seed_given) cfg.seed = seed;

  const mvcs::SuiteReport report = mvcs::run_suite(cfg);
  const mvcs::ReportFormat fmt =
      format == "csv" ? mvcs::ReportFormat::csv : mvcs::ReportFormat::json;
  const std::string target = !out_path.empty() ? out_path : cfg.output_path;
  if (!target.empty())
    mvcs::write_report_file(report, fmt, target);
  else
    std::cout << mvcs::emit_report(report, fmt);
  return report.all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"module-valued coherent state verification suites"};
  app.require_subcommand(1);

  std::string config_path, format = "json", out_path;
  std::uint64_t seed = 0;
  bool seed_given = false;

  CLI::App* verify = app.add_subcommand("verify", "run the checks described by a config file");
  verify->add_option("--config", config_path, "path to the JSON config")->required();
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "write the report to this path instead of stdout");
  verify->add_option("--seed", seed, "override the config seed")
      ->each([&](const std::string&) { seed_given = true; });

  CLI::App* list_families = app.add_subcommand("list-families", "print the known family keys");
  CLI::App* list_checks = app.add_subcommand("list-checks", "print the known check keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed()) return run_verify(config_path, format, out_path, seed_given, seed);
    if (list_families->parsed()) {
      for (const auto& f : mvcs::known_families()) std::cout << f << "\n";
      return kExitPass;
    }
    if (list_checks->parsed()) {
      for (const auto& c : mvcs::known_checks()) std::cout << c << "\n";
      return kExitPass;
    }
  } catch (const mvcs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const mvcs::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitConfigError;
}
