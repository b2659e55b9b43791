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

#include "sectopk/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "sectopk/codec.hpp"
#include "sectopk/error.hpp"
#include "sectopk/topk.hpp"

namespace sectopk::sim {

std::string_view mode_name(AdversaryMode mode) {
  switch (mode) {
    case AdversaryMode::None: return "none";
    case AdversaryMode::FlipByte: return "flip_byte";
    case AdversaryMode::DropRecord: return "drop_record";
    case AdversaryMode::ForgeSignature: return "forge_signature";
    case AdversaryMode::Reorder: return "reorder";
  }
  return "none";
}

std::optional<AdversaryMode> parse_mode(std::string_view name) {
  for (AdversaryMode m : {AdversaryMode::None, AdversaryMode::FlipByte, AdversaryMode::DropRecord,
                          AdversaryMode::ForgeSignature, AdversaryMode::Reorder}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    fail(ErrorCode::InvalidArgument, "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::int64_t parse_milli(std::string_view text) {
  const double v = parse_number<double>(text);
  if (!std::isfinite(v) || std::fabs(v) > 1e12) fail(ErrorCode::InvalidArgument, "value out of range");
  return std::llround(v * 1000.0);
}

std::string milli_string(std::int64_t milli) {
  return topk::format_value(static_cast<double>(milli) / 1000.0);
}

}  // namespace

EpochSet EpochSet::parse(std::string_view text) {
  text = trim(text);
  if (text == "*" || text == "all") return all();
  EpochSet set;
  set.all_ = false;
  for (std::string_view item : split(text, ',')) {
    if (item.empty()) fail(ErrorCode::InvalidArgument, "empty epoch list entry");
    Range r{0, 0, 1};
    std::string_view range = item;
    if (auto slash = item.find('/'); slash != std::string_view::npos) {
      r.step = parse_number<std::uint32_t>(trim(item.substr(slash + 1)));
      if (r.step == 0) fail(ErrorCode::InvalidArgument, "epoch step must be positive");
      range = trim(item.substr(0, slash));
    }
    if (auto dash = range.find('-'); dash != std::string_view::npos) {
      r.lo = parse_number<std::uint32_t>(trim(range.substr(0, dash)));
      r.hi = parse_number<std::uint32_t>(trim(range.substr(dash + 1)));
    } else {
      r.lo = r.hi = parse_number<std::uint32_t>(range);
    }
    if (r.lo > r.hi) fail(ErrorCode::InvalidArgument, "epoch range has lo > hi");
    set.ranges_.push_back(r);
  }
  return set;
}

bool EpochSet::contains(std::uint32_t epoch) const {
  if (all_) return true;
  for (const Range& r : ranges_) {
    if (epoch >= r.lo && epoch <= r.hi && (epoch - r.lo) % r.step == 0) return true;
  }
  return false;
}

std::string EpochSet::describe() const {
  if (all_) return "*";
  std::string out;
  for (const Range& r : ranges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(r.lo);
    if (r.hi != r.lo) out += '-' + std::to_string(r.hi);
    if (r.step != 1) out += '/' + std::to_string(r.step);
  }
  return out;
}

std::string ScenarioConfig::describe() const {
  std::map<std::string, std::string> kv;
  kv["sensors"] = std::to_string(sensors);
  kv["epochs"] = std::to_string(epochs);
  kv["master_seed"] = std::to_string(master_seed);
  kv["dummy_rate"] = topk::format_value(dummy_rate);
  kv["kappa"] = std::to_string(kappa);
  kv["staleness"] = std::to_string(staleness);
  kv["query.k"] = std::to_string(query_k);
  kv["query.period"] = std::to_string(query_period);
  kv["curve.p"] = std::to_string(curve.curve().p());
  kv["curve.a"] = std::to_string(curve.curve().a());
  kv["curve.b"] = std::to_string(curve.curve().b());
  kv["curve.base"] = ec::to_string(curve.base());
  kv["curve.order"] = std::to_string(curve.order());
  kv["adversary.mode"] = std::string(mode_name(adversary.mode));
  std::string nodes;
  for (std::uint32_t id : adversary.sensors) nodes += (nodes.empty() ? "s" : ",s") + std::to_string(id);
  if (adversary.storage) nodes += nodes.empty() ? "storage" : ",storage";
  kv["adversary.nodes"] = nodes.empty() ? "-" : nodes;
  kv["adversary.epochs"] = adversary.epochs.describe();
  kv["delimiter"] = delimiter == codec::kUnitSeparator ? "unit_separator" : "space";
  kv["cover.width"] = std::to_string(cover_width);
  kv["cover.height"] = std::to_string(cover_height);
  kv["env.base"] = milli_string(env.base_milli);
  kv["env.step"] = milli_string(env.step_milli);
  kv["env.hotspot_rate"] = topk::format_value(env.hotspot_rate);
  kv["env.hotspot_boost"] = milli_string(env.hotspot_boost_milli);
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::map<std::string, std::size_t> seen;  // key -> line
  std::optional<std::uint64_t> curve_p;
  std::int64_t curve_a = -1, curve_b = 1;
  std::string adversary_nodes;

  using Setter = std::function<void(std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"sensors", [&](auto v) { cfg.sensors = parse_number<std::uint32_t>(v); }},
      {"epochs", [&](auto v) { cfg.epochs = parse_number<std::uint32_t>(v); }},
      {"master_seed", [&](auto v) { cfg.master_seed = parse_number<std::uint64_t>(v); }},
      {"dummy_rate", [&](auto v) { cfg.dummy_rate = parse_number<double>(v); }},
      {"kappa", [&](auto v) { cfg.kappa = parse_number<std::uint32_t>(v); }},
      {"staleness", [&](auto v) { cfg.staleness = parse_number<std::uint32_t>(v); }},
      {"query.k", [&](auto v) { cfg.query_k = parse_number<std::uint32_t>(v); }},
      {"query.period", [&](auto v) { cfg.query_period = parse_number<std::uint32_t>(v); }},
      {"curve.p", [&](auto v) { curve_p = parse_number<std::uint64_t>(v); }},
      {"curve.a", [&](auto v) { curve_a = parse_number<std::int64_t>(v); }},
      {"curve.b", [&](auto v) { curve_b = parse_number<std::int64_t>(v); }},
      {"adversary.mode",
       [&](auto v) {
         auto mode = parse_mode(v);
         if (!mode) fail(ErrorCode::InvalidArgument, "unknown mode '" + std::string(v) + "'");
         cfg.adversary.mode = *mode;
       }},
      {"adversary.nodes", [&](auto v) { adversary_nodes = std::string(v); }},
      {"adversary.epochs", [&](auto v) { cfg.adversary.epochs = EpochSet::parse(v); }},
      {"adversary.seed", [&](auto v) { cfg.adversary.seed = parse_number<std::uint64_t>(v); }},
      {"delimiter",
       [&](auto v) {
         if (v == "space") cfg.delimiter = codec::kSpaceDelimiter;
         else if (v == "unit_separator") cfg.delimiter = codec::kUnitSeparator;
         else fail(ErrorCode::InvalidArgument, "expected space or unit_separator");
       }},
      {"cover.width", [&](auto v) { cfg.cover_width = parse_number<std::uint32_t>(v); }},
      {"cover.height", [&](auto v) { cfg.cover_height = parse_number<std::uint32_t>(v); }},
      {"env.base", [&](auto v) { cfg.env.base_milli = parse_milli(v); }},
      {"env.step", [&](auto v) { cfg.env.step_milli = parse_milli(v); }},
      {"env.hotspot_rate", [&](auto v) { cfg.env.hotspot_rate = parse_number<double>(v); }},
      {"env.hotspot_boost", [&](auto v) { cfg.env.hotspot_boost_milli = parse_milli(v); }},
  };

  auto config_error = [](std::size_t line, std::string_view key, const std::string& why) -> Error {
    std::string msg = line ? "line " + std::to_string(line) + ": " : std::string{};
    return Error(ErrorCode::ConfigError, msg + "key '" + std::string(key) + "': " + why);
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw config_error(line_no, key, "unknown key");
    if (auto [prev, inserted] = seen.try_emplace(std::string(key), line_no); !inserted) {
      throw config_error(line_no, key, "duplicate (first set on line " +
                                           std::to_string(prev->second) + ")");
    }
    try {
      it->second(value);
    } catch (const Error& e) {
      throw config_error(line_no, key, e.what());
    }
  }

  auto line_of = [&](const char* key) -> std::size_t {
    auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  };
  auto check = [&](bool ok, const char* key, const std::string& why) {
    if (!ok) throw config_error(line_of(key), key, why);
  };

  check(cfg.sensors >= 1 && cfg.sensors <= 4096, "sensors", "must lie in [1, 4096]");
  check(cfg.epochs >= 1, "epochs", "must be positive");
  check(cfg.dummy_rate >= 0.0 && cfg.dummy_rate < 1.0, "dummy_rate", "must lie in [0, 1)");
  check(cfg.query_k >= 1, "query.k", "must be positive");
  check(cfg.query_period >= 1, "query.period", "must be positive");
  check(cfg.kappa >= 1, "kappa", "must be positive");
  check(cfg.cover_width >= 1 && cfg.cover_width <= 65535, "cover.width", "must lie in [1, 65535]");
  check(cfg.cover_height >= 1 && cfg.cover_height <= 65535, "cover.height", "must lie in [1, 65535]");
  check(cfg.env.step_milli >= 0, "env.step", "must be non-negative");
  check(cfg.env.hotspot_rate >= 0.0 && cfg.env.hotspot_rate <= 1.0, "env.hotspot_rate",
        "must lie in [0, 1]");

  if (curve_p || seen.contains("curve.a") || seen.contains("curve.b")) {
    const char* key = curve_p ? "curve.p" : (seen.contains("curve.a") ? "curve.a" : "curve.b");
    try {
      const auto curve = ec::Curve::create(curve_p.value_or(cfg.curve.curve().p()), curve_a, curve_b);
      cfg.curve = ec::CurveParams::derive(curve);
    } catch (const Error& e) {
      throw config_error(line_of(key), key, e.what());
    }
  }
  try {
    codec::chunk_bytes(cfg.curve.curve(), cfg.kappa);
  } catch (const Error& e) {
    throw config_error(line_of("kappa"), "kappa", e.what());
  }

  if (!adversary_nodes.empty()) {
    for (std::string_view token : split(adversary_nodes, ',')) {
      if (token == "storage") {
        cfg.adversary.storage = true;
        continue;
      }
      if (!token.empty() && token.front() == 's') token.remove_prefix(1);
      std::uint32_t id = 0;
      try {
        id = parse_number<std::uint32_t>(token);
      } catch (const Error&) {
        throw config_error(line_of("adversary.nodes"), "adversary.nodes",
                           "bad node '" + std::string(token) + "'");
      }
      check(id >= 1 && id <= cfg.sensors, "adversary.nodes",
            "sensor " + std::to_string(id) + " is not deployed");
      cfg.adversary.sensors.insert(id);
    }
  }

  const AdversaryMode mode = cfg.adversary.mode;
  const bool any_node = cfg.adversary.storage || !cfg.adversary.sensors.empty();
  check(mode == AdversaryMode::None || any_node, "adversary.nodes",
        "mode " + std::string(mode_name(mode)) + " needs at least one compromised node");
  if (mode == AdversaryMode::ForgeSignature) {
    check(!cfg.adversary.storage, "adversary.nodes",
          "forge_signature applies to sensor nodes only");
  }
  if (mode == AdversaryMode::DropRecord || mode == AdversaryMode::Reorder) {
    check(cfg.adversary.sensors.empty(), "adversary.nodes",
          std::string(mode_name(mode)) + " applies to the storage node only");
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, path.string() + ": " + e.what());
  }
}

}  // namespace sectopk::sim
