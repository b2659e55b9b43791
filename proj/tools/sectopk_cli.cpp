// Copyright 2026 The sectopk Authors
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


// sectopk-cli: scenario runner and small utilities over the C API.
//
// Exit codes: 0 clean, 1 usage/config/stage error, 2 detections present.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sectopk/sectopk.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitDetections = 2;

int report_failure(stk_status status, const std::string& context) {
  std::cerr << "sectopk-cli: " << context << ": " << stk_status_string(status) << ": "
            << stk_last_error() << "\n";
  return kExitError;
}

void write_buffer(const stk_buffer* buf) {
  std::fwrite(stk_buffer_data(buf), 1, stk_buffer_size(buf), stdout);
  std::fflush(stdout);
}

int cmd_run(const std::string& path, const std::optional<std::uint64_t>& seed, bool quiet) {
  stk_scenario* scenario = nullptr;
  stk_status st = stk_scenario_load_file(path.c_str(), &scenario);
  if (st != STK_OK) return report_failure(st, "run");
  if (seed) stk_scenario_set_seed(scenario, *seed);

  stk_report* report = nullptr;
  st = stk_scenario_run(scenario, &report);
  stk_scenario_free(scenario);
  if (st != STK_OK) return report_failure(st, "run " + path);

  stk_buffer* text = nullptr;
  st = stk_report_text(report, quiet ? 1 : 0, &text);
  if (st != STK_OK) {
    stk_report_free(report);
    return report_failure(st, "run " + path);
  }
  write_buffer(text);
  stk_buffer_free(text);
  const std::size_t detections = stk_report_detection_count(report);
  stk_report_free(report);
  if (detections > 0) {
    std::cerr << "sectopk-cli: " << detections << " detection(s)\n";
    return kExitDetections;
  }
  return kExitClean;
}

int emit(stk_status st, stk_buffer* buf, const std::string& context) {
  if (st != STK_OK) return report_failure(st, context);
  write_buffer(buf);
  stk_buffer_free(buf);
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure three-tier top-k simulator and toolkit"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  bool quiet = false;
  app.add_option("--seed", seed, "Override master_seed (run) or the demo seed");
  app.add_flag("--quiet", quiet, "Print only the summary block (run)");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a scenario config and print the report");
  run->add_option("config", config_path, "Scenario config file")->required();
  run->fallthrough();

  auto* keys = app.add_subcommand("keys-table", "Print the key-size comparison table");
  keys->fallthrough();

  std::uint64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto* points = app.add_subcommand("curve-points", "Dump the points of y^2 = x^3 + ax + b mod p");
  points->add_option("p", p, "Prime modulus (at most 2^20)")->required();
  points->add_option("a", a, "Coefficient a")->required();
  points->add_option("b", b, "Coefficient b")->required();
  points->fallthrough();

  std::string message;
  auto* demo = app.add_subcommand("demo", "Round-trip one message through the full pipeline");
  demo->add_option("text", message, "7-bit text (empty when omitted)");
  demo->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*run) return cmd_run(config_path, seed, quiet);

  stk_buffer* buf = nullptr;
  if (*keys) {
    const stk_status st = stk_keys_table(&buf);
    return emit(st, buf, "keys-table");
  }
  if (*points) {
    const stk_status st = stk_curve_points_csv(p, a, b, &buf);
    return emit(st, buf, "curve-points");
  }

  int matched = 0;
  const stk_status st =
      stk_demo(message.data(), message.size(), seed.value_or(1), &buf, &matched);
  const int rc = emit(st, buf, "demo");
  if (rc != kExitClean) return rc;
  if (!matched) {
    std::cerr << "sectopk-cli: demo: recovered text differs from input\n";
    return kExitError;
  }
  return kExitClean;
}
