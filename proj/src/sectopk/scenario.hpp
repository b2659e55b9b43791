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

// Scenario configuration: a UTF-8 `key = value` file with `#` comments.
//
// Keys (all optional, defaults in ScenarioConfig):
//   sensors, epochs, master_seed, dummy_rate, kappa, staleness,
//   query.k, query.period,
//   curve.p, curve.a, curve.b,
//   adversary.mode      none | flip_byte | drop_record | forge_signature | reorder
//   adversary.nodes     comma list of sensor ids (3 or s3) and/or "storage"
//   adversary.epochs    "*" or comma list of N, A-B, A-B/STEP
//   adversary.seed
//   delimiter           space | unit_separator
//   cover.width, cover.height
//   env.base, env.step, env.hotspot_rate, env.hotspot_boost

#ifndef SECTOPK_SCENARIO_HPP
#define SECTOPK_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sectopk/ec.hpp"

namespace sectopk::sim {

enum class AdversaryMode { None, FlipByte, DropRecord, ForgeSignature, Reorder };

std::string_view mode_name(AdversaryMode mode);
std::optional<AdversaryMode> parse_mode(std::string_view name);

// Epoch activation schedule.
class EpochSet {
 public:
  static EpochSet all() { return EpochSet{}; }
  // Throws InvalidArgument; parse_config rewraps it as ConfigError.
  static EpochSet parse(std::string_view text);

  bool contains(std::uint32_t epoch) const;
  std::string describe() const;

 private:
  struct Range {
    std::uint32_t lo, hi, step;
  };
  bool all_ = true;
  std::vector<Range> ranges_;
};

struct AdversaryConfig {
  AdversaryMode mode = AdversaryMode::None;
  std::set<std::uint32_t> sensors;  // compromised sensor ids
  bool storage = false;             // storage node compromised
  EpochSet epochs;
  std::optional<std::uint64_t> seed;  // derived from master_seed when unset

  bool active(std::uint32_t epoch) const {
    return mode != AdversaryMode::None && epochs.contains(epoch);
  }
};

struct EnvironmentConfig {
  // Milli-units; readings carry three decimals.
  std::int64_t base_milli = 50'000;
  std::int64_t step_milli = 2'000;
  double hotspot_rate = 0.05;
  std::int64_t hotspot_boost_milli = 30'000;
};

struct ScenarioConfig {
  std::uint32_t sensors = 6;
  std::uint32_t epochs = 20;
  std::uint64_t master_seed = 1;
  double dummy_rate = 0.25;
  std::uint32_t kappa = ec::kDefaultKappa;
  std::uint32_t staleness = 0;
  std::uint32_t query_k = 3;
  std::uint32_t query_period = 5;
  ec::CurveParams curve = ec::CurveParams::standard();
  AdversaryConfig adversary;
  std::uint8_t delimiter = 32;
  std::uint32_t cover_width = 128;
  std::uint32_t cover_height = 128;
  EnvironmentConfig env;

  // One line per effective setting, sorted by key; used in report headers.
  std::string describe() const;
};

// Throws Error(ConfigError) with "line N: key 'k': reason" diagnostics.
ScenarioConfig parse_config(std::string_view text);
// Throws Error(ConfigError) naming the path when it cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace sectopk::sim

#endif  // SECTOPK_SCENARIO_HPP
