// Copyright 2026 The twisted-thue authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tthue/errors.hpp"
#include "tthue/report.hpp"

namespace {

int run_stage(const std::string& config_path, long precision, bool force,
              const std::string& format, tthue::Stage upto) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config file: " << config_path << "\n";
    return 3;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  tthue::JobConfig cfg;
  try {
    cfg = tthue::parse_config(buffer.str());
  } catch (const tthue::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  if (precision > 0) cfg.precision = precision;

  try {
    tthue::Report rep = tthue::run_pipeline(cfg, upto, force);
    std::cout << tthue::emit_report(rep, format) << "\n";
    return tthue::report_exit_code(rep);
  } catch (const tthue::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == tthue::errc::precision_exhausted ? 4 : 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified solver and verifier for twisted Thue equations "
               "|N(x - gamma_1^{t_1}...gamma_s^{t_s} y)| = 1"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  long precision = 0;
  bool force = false;
  std::string format = "text";
  app.add_option("--config", config_path, "JSON job configuration")->required();
  app.add_option("--precision", precision, "initial working precision in bits (>= 64)");
  app.add_flag("--force", force, "continue past non-certified hypotheses");
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* check = app.add_subcommand("check", "verify the theorem hypotheses");
  auto* bounds = app.add_subcommand("bounds", "hypotheses plus the effective constant ledger");
  auto* search = app.add_subcommand("search", "hypotheses, bounds and the solution search");
  auto* analyze = app.add_subcommand("analyze", "full pipeline with per-solution diagnostics");
  auto* report = app.add_subcommand("report", "full pipeline, machine-readable report");

  CLI11_PARSE(app, argc, argv);

  tthue::Stage upto = tthue::Stage::Check;
  if (bounds->parsed()) upto = tthue::Stage::Bounds;
  if (search->parsed()) upto = tthue::Stage::Search;
  if (analyze->parsed()) upto = tthue::Stage::Analyze;
  if (report->parsed()) {
    upto = tthue::Stage::Analyze;
    if (format == "text") format = "json";
  }
  (void)check;
  return run_stage(config_path, precision, force, format, upto);
}
