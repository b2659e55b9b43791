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

#ifndef SECTOPK_TOPK_HPP
#define SECTOPK_TOPK_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sectopk::topk {

using SensorId = std::uint32_t;
using Epoch = std::uint32_t;

struct Reading {
  SensorId sensor = 0;
  Epoch epoch = 0;
  double value = 0.0;
  friend bool operator==(const Reading&, const Reading&) = default;
};

struct ScoredReading {
  Reading reading;
  double score = 0.0;
};

using ScoringMode = std::function<double(const Reading&)>;

ScoringMode identity_scoring();
// value * weight[sensor]; sensors without an entry use default_weight.
ScoringMode linear_weight_scoring(std::map<SensorId, double> weights,
                                  double default_weight = 1.0);

// Attaches scores; input order is preserved.
std::vector<ScoredReading> rank(std::span<const Reading> readings,
                                const ScoringMode& scoring = identity_scoring());

// Total order used for every answer: score descending, then sensor id
// ascending, then epoch ascending.
bool ranks_before(const ScoredReading& lhs, const ScoredReading& rhs);

struct EpochWindow {
  Epoch lo = 0;
  Epoch hi = 0;
  bool contains(Epoch e) const { return lo <= e && e <= hi; }
  friend bool operator==(const EpochWindow&, const EpochWindow&) = default;
};

struct TopKQuery {
  std::uint32_t k = 1;
  EpochWindow window;
  std::optional<std::set<SensorId>> region;  // nullopt = every sensor

  // Throws InvalidArgument for k == 0 or lo > hi.
  void validate() const;
  bool selects(const Reading& r) const;
  friend bool operator==(const TopKQuery&, const TopKQuery&) = default;
};

struct TopKResult {
  std::vector<Reading> entries;
  std::vector<double> scores;
  TopKQuery query;
  friend bool operator==(const TopKResult&, const TopKResult&) = default;
};

// Filter, rank, partial sort, truncate.
TopKResult top_k(std::span<const Reading> readings, const TopKQuery& query,
                 const ScoringMode& scoring = identity_scoring());

// sensor id -> last epoch seen. Never moves backwards.
class AvailabilityIndex {
 public:
  void observe(SensorId sensor, Epoch epoch);
  std::optional<Epoch> last_seen(SensorId sensor) const;
  const std::map<SensorId, Epoch>& entries() const { return last_seen_; }

 private:
  std::map<SensorId, Epoch> last_seen_;
};

struct Availability {
  bool available = true;
  std::vector<SensorId> unavailable;  // ascending
};

// A sensor is unavailable when absent from the index or last seen before
// window.hi - staleness. `deployed` supplies the region for region-less
// queries.
Availability check_availability(const TopKQuery& query, const AvailabilityIndex& index,
                                 std::uint32_t staleness,
                                 std::span<const SensorId> deployed);

/// In-process store keyed by (sensor, epoch) with its availability index.
/// Single writer; const member functions may run concurrently.
class Datastore {
 public:
  // Returns true when an existing (sensor, epoch) entry was overwritten.
  bool store(const Reading& reading);
  std::optional<double> fetch(SensorId sensor, Epoch epoch) const;

  std::vector<Reading> readings() const;  // sorted by (sensor, epoch)
  std::vector<Reading> readings_in(const EpochWindow& window) const;
  std::size_t size() const { return rows_.size(); }
  const AvailabilityIndex& index() const { return index_; }

  // "sensor_id,epoch,value\n" lines sorted by (sensor_id, epoch); values use
  // the shortest representation that round-trips.
  std::string snapshot() const;
  static Datastore from_snapshot(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static Datastore load(const std::filesystem::path& path);

 private:
  std::map<std::pair<SensorId, Epoch>, double> rows_;
  AvailabilityIndex index_;
};

std::string format_value(double value);

}  // namespace sectopk::topk

#endif  // SECTOPK_TOPK_HPP
