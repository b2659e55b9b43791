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

#include "sectopk/topk.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sectopk/error.hpp"

namespace sectopk::topk {

ScoringMode identity_scoring() {
  return [](const Reading& r) { return r.value; };
}

ScoringMode linear_weight_scoring(std::map<SensorId, double> weights, double default_weight) {
  return [weights = std::move(weights), default_weight](const Reading& r) {
    auto it = weights.find(r.sensor);
    return r.value * (it == weights.end() ? default_weight : it->second);
  };
}

std::vector<ScoredReading> rank(std::span<const Reading> readings, const ScoringMode& scoring) {
  std::vector<ScoredReading> out;
  out.reserve(readings.size());
  for (const Reading& r : readings) out.push_back(ScoredReading{r, scoring(r)});
  return out;
}

bool ranks_before(const ScoredReading& lhs, const ScoredReading& rhs) {
  if (lhs.score != rhs.score) return lhs.score > rhs.score;
  if (lhs.reading.sensor != rhs.reading.sensor) return lhs.reading.sensor < rhs.reading.sensor;
  return lhs.reading.epoch < rhs.reading.epoch;
}

void TopKQuery::validate() const {
  if (k == 0) fail(ErrorCode::InvalidArgument, "top-k query needs k >= 1");
  if (window.lo > window.hi) fail(ErrorCode::InvalidArgument, "epoch window has lo > hi");
}

bool TopKQuery::selects(const Reading& r) const {
  return window.contains(r.epoch) && (!region || region->contains(r.sensor));
}

TopKResult top_k(std::span<const Reading> readings, const TopKQuery& query,
                 const ScoringMode& scoring) {
  query.validate();
  std::vector<Reading> selected;
  for (const Reading& r : readings) {
    if (query.selects(r)) selected.push_back(r);
  }
  std::vector<ScoredReading> scored = rank(selected, scoring);
  const std::size_t keep = std::min<std::size_t>(query.k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                    scored.end(), ranks_before);
  TopKResult result;
  result.query = query;
  for (std::size_t i = 0; i < keep; ++i) {
    result.entries.push_back(scored[i].reading);
    result.scores.push_back(scored[i].score);
  }
  return result;
}

void AvailabilityIndex::observe(SensorId sensor, Epoch epoch) {
  auto [it, inserted] = last_seen_.try_emplace(sensor, epoch);
  if (!inserted && it->second < epoch) it->second = epoch;
}

std::optional<Epoch> AvailabilityIndex::last_seen(SensorId sensor) const {
  auto it = last_seen_.find(sensor);
  if (it == last_seen_.end()) return std::nullopt;
  return it->second;
}

Availability check_availability(const TopKQuery& query, const AvailabilityIndex& index,
                                std::uint32_t staleness, std::span<const SensorId> deployed) {
  query.validate();
  std::set<SensorId> region;
  if (query.region) region = *query.region;
  else region.insert(deployed.begin(), deployed.end());

  const std::int64_t threshold = static_cast<std::int64_t>(query.window.hi) - staleness;
  Availability out;
  for (SensorId id : region) {
    auto seen = index.last_seen(id);
    if (!seen || static_cast<std::int64_t>(*seen) < threshold) out.unavailable.push_back(id);
  }
  out.available = out.unavailable.empty();
  return out;
}

bool Datastore::store(const Reading& reading) {
  if (!std::isfinite(reading.value)) fail(ErrorCode::InvalidArgument, "reading value must be finite");
  auto [it, inserted] = rows_.insert_or_assign({reading.sensor, reading.epoch}, reading.value);
  index_.observe(reading.sensor, reading.epoch);
  return !inserted;
}

std::optional<double> Datastore::fetch(SensorId sensor, Epoch epoch) const {
  auto it = rows_.find({sensor, epoch});
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

std::vector<Reading> Datastore::readings() const {
  std::vector<Reading> out;
  out.reserve(rows_.size());
  for (const auto& [key, value] : rows_) out.push_back(Reading{key.first, key.second, value});
  return out;
}

std::vector<Reading> Datastore::readings_in(const EpochWindow& window) const {
  std::vector<Reading> out;
  for (const auto& [key, value] : rows_) {
    if (window.contains(key.second)) out.push_back(Reading{key.first, key.second, value});
  }
  return out;
}

std::string format_value(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string Datastore::snapshot() const {
  std::string out;
  for (const auto& [key, value] : rows_) {
    out += std::to_string(key.first);
    out += ',';
    out += std::to_string(key.second);
    out += ',';
    out += format_value(value);
    out += '\n';
  }
  return out;
}

namespace {

template <typename T>
T parse_field(std::string_view text, std::size_t line, const char* what) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    fail(ErrorCode::InvalidArgument,
         "snapshot line " + std::to_string(line) + ": bad " + what + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Datastore Datastore::from_snapshot(std::string_view text) {
  Datastore store;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      fail(ErrorCode::InvalidArgument, "snapshot line " + std::to_string(line_no) +
                                           ": expected sensor_id,epoch,value");
    }
    Reading r;
    r.sensor = parse_field<SensorId>(line.substr(0, c1), line_no, "sensor id");
    r.epoch = parse_field<Epoch>(line.substr(c1 + 1, c2 - c1 - 1), line_no, "epoch");
    r.value = parse_field<double>(line.substr(c2 + 1), line_no, "value");
    store.store(r);
  }
  return store;
}

void Datastore::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << snapshot();
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

Datastore Datastore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_snapshot(buf.str());
}

}  // namespace sectopk::topk
