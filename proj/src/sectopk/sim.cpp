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

#include "sectopk/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "sectopk/codec.hpp"
#include "sectopk/modarith.hpp"
#include "sectopk/rng.hpp"

namespace sectopk::sim {

namespace {

// Labels for derive_seed; never reorder.
enum SeedTag : std::uint64_t {
  kTagAuthorityKey = 1,
  kTagSensorKey = 2,
  kTagSensorDummy = 3,
  kTagSensorNonce = 4,
  kTagCover = 5,
  kTagMacKey = 6,
  kTagEnvironment = 7,
  kTagAdversary = 8,
};

constexpr std::uint64_t kSignLabel = ~std::uint64_t{0};
constexpr std::size_t kMacKeyBytes = 32;

std::string join_ids(std::span<const SensorId> ids) {
  std::string out;
  for (SensorId id : ids) {
    if (!out.empty()) out += ',';
    out += node_name(id);
  }
  return out.empty() ? "-" : out;
}

std::string answer_string(const topk::TopKResult& result) {
  std::string out;
  for (const topk::Reading& r : result.entries) {
    if (!out.empty()) out += ',';
    out += node_name(r.sensor) + '@' + std::to_string(r.epoch) + ':' + topk::format_value(r.value);
  }
  return out.empty() ? "-" : out;
}

class Environment {
 public:
  Environment(const EnvironmentConfig& cfg, std::uint32_t sensors, std::uint64_t seed)
      : cfg_(cfg) {
    for (std::uint32_t i = 1; i <= sensors; ++i) {
      rngs_.emplace_back(derive_seed(seed, {i}));
      const std::int64_t spread = 5 * cfg.step_milli;
      const auto offset = static_cast<std::int64_t>(rngs_.back().uniform(0, 2 * spread)) - spread;
      state_.push_back(std::max<std::int64_t>(0, cfg.base_milli + offset));
    }
  }

  std::vector<topk::Reading> advance(Epoch epoch) {
    std::vector<topk::Reading> out;
    for (std::size_t i = 0; i < state_.size(); ++i) {
      DeterministicRng& rng = rngs_[i];
      const auto step = static_cast<std::uint64_t>(cfg_.step_milli);
      const auto delta = static_cast<std::int64_t>(rng.uniform(0, 2 * step)) - cfg_.step_milli;
      state_[i] = std::max<std::int64_t>(0, state_[i] + delta);
      const bool hotspot = rng.bernoulli(cfg_.hotspot_rate);
      const std::int64_t milli = state_[i] + (hotspot ? cfg_.hotspot_boost_milli : 0);
      out.push_back(topk::Reading{static_cast<SensorId>(i + 1), epoch,
                                  static_cast<double>(milli) / 1000.0});
    }
    return out;
  }

 private:
  EnvironmentConfig cfg_;
  std::vector<DeterministicRng> rngs_;
  std::vector<std::int64_t> state_;
};

}  // namespace

std::string_view cause_name(DetectionCause cause) {
  switch (cause) {
    case DetectionCause::MalformedBundle: return "malformed_bundle";
    case DetectionCause::SignatureInvalid: return "signature_invalid";
    case DetectionCause::MalformedHeader: return "malformed_header";
    case DetectionCause::MalformedFrame: return "malformed_frame";
    case DetectionCause::MacMismatch: return "mac_mismatch";
    case DetectionCause::MissingRecord: return "missing_record";
    case DetectionCause::EvidenceMismatch: return "evidence_mismatch";
    case DetectionCause::RecordInconsistent: return "record_inconsistent";
    case DetectionCause::AnswerMismatch: return "answer_mismatch";
  }
  return "unknown";
}

std::string node_name(SensorId sensor) { return "s" + std::to_string(sensor); }

Deployment Deployment::from_config(const ScenarioConfig& cfg) {
  Deployment dep;
  dep.params = cfg.curve;
  dep.kappa = cfg.kappa;
  dep.dummy_rate = cfg.dummy_rate;
  dep.delimiter = cfg.delimiter;
  dep.layout = wire::FrameLayout::for_params(cfg.curve);
  dep.chunk_width = codec::chunk_bytes(cfg.curve.curve(), cfg.kappa);
  return dep;
}

std::string format_reading(const topk::Reading& reading, std::uint8_t delimiter) {
  const std::int64_t milli = std::llround(reading.value * 1000.0);
  const std::uint64_t magnitude = milli < 0 ? static_cast<std::uint64_t>(-milli) : milli;
  char value[48];
  std::snprintf(value, sizeof value, "%s%llu.%03llu", milli < 0 ? "-" : "",
                static_cast<unsigned long long>(magnitude / 1000),
                static_cast<unsigned long long>(magnitude % 1000));
  const char d = static_cast<char>(delimiter);
  return std::to_string(reading.sensor) + d + std::to_string(reading.epoch) + d + value;
}

std::optional<topk::Reading> parse_reading(std::string_view text, std::uint8_t delimiter) {
  const char d = static_cast<char>(delimiter);
  const auto first = text.find(d);
  if (first == std::string_view::npos) return std::nullopt;
  const auto second = text.find(d, first + 1);
  if (second == std::string_view::npos || text.find(d, second + 1) != std::string_view::npos) {
    return std::nullopt;
  }
  auto parse_uint = [](std::string_view s, std::uint32_t& out) {
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc{} && end == s.data() + s.size();
  };
  topk::Reading r;
  if (!parse_uint(text.substr(0, first), r.sensor)) return std::nullopt;
  if (!parse_uint(text.substr(first + 1, second - first - 1), r.epoch)) return std::nullopt;
  const std::string_view value = text.substr(second + 1);
  const auto dot = value.find('.');
  if (dot == std::string_view::npos || value.size() - dot - 1 != 3) return std::nullopt;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), r.value);
  if (ec != std::errc{} || end != value.data() + value.size() || !std::isfinite(r.value)) {
    return std::nullopt;
  }
  return r;
}

wire::SensorBundle sensor_emit(const SensorNode& node, const topk::Reading& reading,
                               const Deployment& dep) {
  const ec::Curve& curve = dep.params.curve();
  const codec::AsciiStream ascii = codec::to_ascii(format_reading(reading, dep.delimiter));
  const codec::ObfuscatedStream obfuscated = codec::insert_dummies(
      ascii, derive_seed(node.dummy_seed, {reading.epoch}), dep.dummy_rate);
  if (obfuscated.codes.size() > 0xFFFF) fail(ErrorCode::InvalidArgument, "reading text too long");

  wire::SensorBundle bundle;
  bundle.epoch = reading.epoch;
  bundle.record.sensor = node.id;
  bundle.record.code_count = static_cast<std::uint16_t>(obfuscated.codes.size());
  const auto chunks = codec::pack_chunks(obfuscated.codes, dep.chunk_width);
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const ec::CurvePoint message = codec::encode_chunk(chunks[i], dep.chunk_width, curve, dep.kappa);
    bundle.record.ciphertext.push_back(ec::encrypt(
        message, node.authority_key, dep.params, derive_seed(node.nonce_seed, {reading.epoch, i})));
  }
  const Bytes body = wire::signed_body(bundle.epoch, bundle.record, dep.layout);
  bundle.signature = auth::schnorr_sign(body, node.keypair, node.id, dep.params,
                                        derive_seed(node.nonce_seed, {reading.epoch, kSignLabel}));
  return bundle;
}

StorageVerdict storage_verify(const StorageNode& node, std::span<const Transmission> incoming,
                              Epoch epoch, const Deployment& dep) {
  StorageVerdict verdict;
  std::vector<wire::SensorBundle> candidates;
  std::set<SensorId> seen;
  for (const auto& [sender, bytes] : incoming) {
    wire::SensorBundle bundle;
    try {
      bundle = wire::decode_bundle(bytes, dep.layout);
    } catch (const Error& e) {
      verdict.alerts.push_back({sender, DetectionCause::MalformedBundle, e.what()});
      continue;
    }
    std::string problem;
    if (bundle.record.sensor != sender) problem = "claims sensor " + std::to_string(bundle.record.sensor);
    else if (bundle.epoch != epoch) problem = "claims epoch " + std::to_string(bundle.epoch);
    else if (!node.registry.contains(sender)) problem = "unregistered sender";
    else if (!seen.insert(sender).second) problem = "duplicate bundle";
    if (!problem.empty()) {
      verdict.alerts.push_back({sender, DetectionCause::MalformedBundle, problem});
      continue;
    }
    candidates.push_back(std::move(bundle));
  }
  if (candidates.empty()) return verdict;

  auth::MessageMap messages;
  std::vector<auth::SensorSignature> sigs;
  for (const wire::SensorBundle& b : candidates) {
    messages[b.record.sensor] = wire::signed_body(epoch, b.record, dep.layout);
    sigs.push_back(b.signature);
  }
  const auth::AggregateSignature agg = auth::aggregate(sigs, dep.params);
  verdict.aggregate_ok = auth::aggregate_verify(agg, messages, node.registry, dep.params);
  if (verdict.aggregate_ok) {
    verdict.honest = std::move(candidates);
    return verdict;
  }
  const auto forged = auth::localize_forgery(sigs, messages, node.registry, dep.params);
  const std::set<SensorId> forged_set(forged.begin(), forged.end());
  for (SensorId id : forged) {
    verdict.alerts.push_back({id, DetectionCause::SignatureInvalid, "individual verification failed"});
  }
  for (wire::SensorBundle& b : candidates) {
    if (!forged_set.contains(b.record.sensor)) verdict.honest.push_back(std::move(b));
  }
  return verdict;
}

wire::SecurePayload storage_assemble(const StorageNode& node,
                                     std::span<const wire::SensorBundle> bundles, Epoch epoch,
                                     const Deployment& dep) {
  wire::SecurePayload payload;
  payload.epoch = epoch;
  std::vector<auth::SensorSignature> sigs;
  for (const wire::SensorBundle& b : bundles) {
    payload.sensor_batch.push_back(b.record);
    sigs.push_back(b.signature);
  }
  if (!sigs.empty()) payload.agg_sig = auth::aggregate(sigs, dep.params);
  wire::seal_payload(payload, node.mac_key, dep.layout);
  return payload;
}

stego::StegoImage storage_conceal(const StorageNode& node, const wire::SecurePayload& payload,
                                  Epoch epoch, std::uint32_t width, std::uint32_t height,
                                  const Deployment& dep) {
  const stego::StegoImage cover =
      stego::StegoImage::synthetic(width, height, derive_seed(node.cover_seed, {epoch}));
  return stego::embed_lsb(cover, wire::frame_payload(payload, dep.layout));
}

IngestResult storage_ingest(const StorageNode& node, std::span<const Transmission> incoming,
                            Epoch epoch, std::uint32_t cover_width, std::uint32_t cover_height,
                            const Deployment& dep) {
  IngestResult out;
  out.verdict = storage_verify(node, incoming, epoch, dep);
  out.payload = storage_assemble(node, out.verdict.honest, epoch, dep);
  out.image = storage_conceal(node, out.payload, epoch, cover_width, cover_height, dep);
  return out;
}

Authority::Authority(ec::KeyPair keypair, Bytes mac_key, auth::PublicKeyMap registry,
                     std::map<SensorId, std::uint64_t> dummy_seeds, Deployment dep)
    : keypair_(keypair),
      mac_key_(std::move(mac_key)),
      registry_(std::move(registry)),
      dummy_seeds_(std::move(dummy_seeds)),
      dep_(std::move(dep)) {}

std::vector<SensorId> Authority::deployed() const {
  std::vector<SensorId> ids;
  for (const auto& [id, key] : registry_) ids.push_back(id);
  return ids;
}

std::optional<topk::Reading> Authority::open_record(const wire::SensorRecord& record,
                                                    Epoch epoch) const {
  auto seed = dummy_seeds_.find(record.sensor);
  if (seed == dummy_seeds_.end()) return std::nullopt;
  try {
    std::vector<std::uint64_t> chunks;
    chunks.reserve(record.ciphertext.size());
    for (const ec::CipherPair& pair : record.ciphertext) {
      const ec::CurvePoint message = ec::decrypt(keypair_.secret, pair, dep_.params.curve());
      chunks.push_back(codec::decode_chunk(message, dep_.chunk_width, dep_.kappa));
    }
    codec::ObfuscatedStream stream;
    stream.codes = codec::unpack_chunks(chunks, dep_.chunk_width, record.code_count);
    const codec::AsciiStream ascii =
        codec::strip_dummies(stream, derive_seed(seed->second, {epoch}), dep_.dummy_rate);
    return parse_reading(codec::from_ascii(ascii), dep_.delimiter);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Authority::Received Authority::receive(const stego::StegoImage& img, Epoch epoch) {
  Received out;
  Evidence& ev = evidence_[epoch];
  auto detect = [&](DetectionCause cause, std::string detail) {
    out.detections.push_back(
        Detection{epoch, epoch, std::string(kStorageNode), cause, std::move(detail)});
  };

  Bytes data;
  try {
    data = stego::extract_lsb(img);
  } catch (const Error& e) {
    detect(DetectionCause::MalformedHeader, e.what());
    return out;
  }
  wire::SecurePayload payload;
  try {
    payload = wire::unframe_payload(data, dep_.layout);
  } catch (const Error& e) {
    detect(DetectionCause::MalformedFrame, e.what());
    return out;
  }
  if (!wire::verify_payload(payload, mac_key_, dep_.layout)) {
    detect(DetectionCause::MacMismatch, "recomputed digest differs");
    return out;
  }
  if (payload.epoch != epoch) {
    detect(DetectionCause::MalformedFrame, "payload carries epoch " + std::to_string(payload.epoch));
    return out;
  }

  out.accepted = true;
  ev.accepted = true;
  for (const wire::SensorRecord& record : payload.sensor_batch) {
    auto reading = open_record(record, epoch);
    if (!reading || reading->sensor != record.sensor || reading->epoch != epoch) {
      out.quarantined.push_back(record.sensor);
      continue;
    }
    if (store_.store(*reading)) out.overwritten.push_back(reading->sensor);
    out.stored.push_back(*reading);
  }
  ev.quarantined = out.quarantined;
  ev.payload = std::move(payload);
  return out;
}

void Authority::note_alerts(Epoch epoch, std::span<const Alert> alerts) {
  Evidence& ev = evidence_[epoch];
  std::set<SensorId> ids;
  for (const Alert& a : alerts) ids.insert(a.sensor);
  ev.alerted += ids.size();
}

IssuedAnswer Authority::answer(const topk::TopKQuery& query, Epoch epoch, std::uint32_t staleness) {
  const std::vector<SensorId> ids = deployed();
  const topk::Availability availability =
      topk::check_availability(query, store_.index(), staleness, ids);
  const std::vector<topk::Reading> rows = store_.readings_in(query.window);
  IssuedAnswer answer;
  answer.epoch = epoch;
  answer.query = query;
  answer.available = availability.available;
  answer.unavailable = availability.unavailable;
  answer.result = topk::top_k(rows, query);
  issued_.push_back(answer);
  return answer;
}

std::optional<Authority::AuditReport> Authority::periodic_verify(Epoch epoch, std::uint32_t period,
                                                                 bool force) {
  if (period == 0) fail(ErrorCode::InvalidArgument, "audit period must be positive");
  if (!force && (static_cast<std::uint64_t>(epoch) + 1) % period != 0) return std::nullopt;
  if (!next_audit_start_ || *next_audit_start_ > epoch) return std::nullopt;

  AuditReport report;
  report.window = topk::EpochWindow{*next_audit_start_, epoch};
  const std::vector<SensorId> population = deployed();
  auto finding = [&](Epoch subject, DetectionCause cause, std::string detail) {
    report.findings.push_back(
        Detection{epoch, subject, std::string(kStorageNode), cause, std::move(detail)});
  };

  for (Epoch e = report.window.lo;; ++e) {
    auto it = evidence_.find(e);
    if (it == evidence_.end()) {
      finding(e, DetectionCause::MissingRecord, "no payload received");
    } else if (it->second.accepted) {
      const Evidence& ev = it->second;
      const wire::SecurePayload& payload = ev.payload;
      ++report.payloads_checked;

      std::set<SensorId> record_ids;
      auth::MessageMap messages;
      for (const wire::SensorRecord& record : payload.sensor_batch) {
        record_ids.insert(record.sensor);
        messages[record.sensor] = wire::signed_body(e, record, dep_.layout);
      }
      std::set<SensorId> signer_ids;
      for (const auto& [id, commitment] : payload.agg_sig.commitments) signer_ids.insert(id);

      bool evidence_ok = record_ids.size() == payload.sensor_batch.size() && record_ids == signer_ids;
      if (evidence_ok && !record_ids.empty()) {
        try {
          evidence_ok = auth::aggregate_verify(payload.agg_sig, messages, registry_, dep_.params);
        } catch (const Error&) {
          evidence_ok = false;
        }
      }
      if (!evidence_ok) {
        finding(e, DetectionCause::EvidenceMismatch, "retained signatures do not cover the records");
      } else if (!ev.quarantined.empty()) {
        finding(e, DetectionCause::RecordInconsistent, "quarantined=" + join_ids(ev.quarantined));
      }
      if (record_ids.size() + ev.alerted < population.size()) {
        finding(e, DetectionCause::MissingRecord,
                "records=" + std::to_string(record_ids.size()) + " alerted=" +
                    std::to_string(ev.alerted) + " deployed=" + std::to_string(population.size()));
      }
    }
    if (e == epoch) break;
  }

  for (; audited_answers_ < issued_.size(); ++audited_answers_) {
    const IssuedAnswer& issued = issued_[audited_answers_];
    ++report.answers_checked;
    const auto rows = store_.readings_in(issued.query.window);
    if (topk::top_k(rows, issued.query).entries != issued.result.entries) {
      finding(issued.epoch, DetectionCause::AnswerMismatch, "recomputed answer differs");
    }
  }

  next_audit_start_ = epoch == std::numeric_limits<Epoch>::max()
                          ? std::nullopt
                          : std::optional<Epoch>(epoch + 1);
  return report;
}

bool explains(const TamperEvent& event, const Detection& detection) {
  if (event.epoch != detection.subject_epoch) return false;
  const DetectionCause c = detection.cause;
  switch (event.mode) {
    case AdversaryMode::None:
      return false;
    case AdversaryMode::FlipByte:
      if (event.target) {
        return detection.node == node_name(*event.target) &&
               (c == DetectionCause::MalformedBundle || c == DetectionCause::SignatureInvalid);
      }
      return c == DetectionCause::MalformedHeader || c == DetectionCause::MalformedFrame ||
             c == DetectionCause::MacMismatch;
    case AdversaryMode::ForgeSignature:
      return event.target && detection.node == node_name(*event.target) &&
             c == DetectionCause::SignatureInvalid;
    case AdversaryMode::DropRecord:
      return c == DetectionCause::MissingRecord;
    case AdversaryMode::Reorder:
      return c == DetectionCause::EvidenceMismatch;
  }
  return false;
}

RunReport run_scenario(const ScenarioConfig& cfg) {
  const Deployment dep = Deployment::from_config(cfg);
  const ec::CurveParams& params = dep.params;
  const std::uint64_t master = cfg.master_seed;

  const ec::KeyPair authority_keys = ec::keygen(params, derive_seed(master, {kTagAuthorityKey}));
  Bytes mac_key(kMacKeyBytes);
  {
    DeterministicRng rng(derive_seed(master, {kTagMacKey}));
    for (auto& b : mac_key) b = static_cast<std::uint8_t>(rng.uniform(0, 255));
  }

  std::vector<SensorNode> sensors;
  auth::PublicKeyMap registry;
  std::map<SensorId, std::uint64_t> dummy_seeds;
  for (SensorId id = 1; id <= cfg.sensors; ++id) {
    SensorNode node;
    node.id = id;
    node.keypair = ec::keygen(params, derive_seed(master, {kTagSensorKey, id}));
    node.authority_key = authority_keys.public_key;
    node.location = "zone-" + std::to_string((id - 1) % 4);
    node.dummy_seed = derive_seed(master, {kTagSensorDummy, id});
    node.nonce_seed = derive_seed(master, {kTagSensorNonce, id});
    registry[id] = node.keypair.public_key;
    dummy_seeds[id] = node.dummy_seed;
    sensors.push_back(node);
  }
  const StorageNode storage{0, registry, derive_seed(master, {kTagCover}), mac_key};
  Authority authority(authority_keys, mac_key, registry, dummy_seeds, dep);
  Environment environment(cfg.env, cfg.sensors, derive_seed(master, {kTagEnvironment}));
  const AdversaryConfig& adv_cfg = cfg.adversary;
  DeterministicRng adversary(adv_cfg.seed.value_or(derive_seed(master, {kTagAdversary})));

  RunReport report;
  report.header = "# sectopk run report v1\n";
  {
    const std::string described = cfg.describe();
    std::size_t start = 0;
    while (start < described.size()) {
      const std::size_t nl = described.find('\n', start);
      report.header += "# " + described.substr(start, nl - start) + "\n";
      start = nl + 1;
    }
  }
  RunSummary& summary = report.summary;
  summary.epochs = cfg.epochs;
  summary.sensors = cfg.sensors;

  std::vector<topk::Reading> truth_window;
  for (Epoch epoch = 0; epoch < cfg.epochs; ++epoch) {
    EpochReport rep;
    rep.epoch = epoch;
    auto line = [&](std::string_view type, std::string_view node, const std::string& detail) {
      rep.lines.push_back(std::to_string(epoch) + "|" + std::string(type) + "|" +
                          std::string(node) + "|" + detail);
    };
    auto tamper = [&](TamperEvent event) {
      line("tamper", event.node, "mode=" + std::string(mode_name(event.mode)) + " " + event.detail);
      report.tamper_log.push_back(std::move(event));
    };
    auto record_detection = [&](const Detection& d) {
      line("detect", d.node,
           "cause=" + std::string(cause_name(d.cause)) + " subject_epoch=" +
               std::to_string(d.subject_epoch) + " detail=\"" + d.detail + "\"");
      rep.detections.push_back(d);
      report.detections.push_back(d);
    };
    const bool active = adv_cfg.active(epoch);

    // Sensors emit; compromised sensors tamper with their own output.
    const std::vector<topk::Reading> truth = environment.advance(epoch);
    std::vector<Transmission> transmissions;
    for (const SensorNode& node : sensors) {
      wire::SensorBundle bundle = sensor_emit(node, truth[node.id - 1], dep);
      Bytes bytes = wire::encode_bundle(bundle, dep.layout);
      line("emit", node_name(node.id),
           "codes=" + std::to_string(bundle.record.code_count) + " pairs=" +
               std::to_string(bundle.record.ciphertext.size()) + " bytes=" +
               std::to_string(bytes.size()));
      if (active && adv_cfg.sensors.contains(node.id)) {
        if (adv_cfg.mode == AdversaryMode::ForgeSignature) {
          bundle.signature.s = modarith::add(bundle.signature.s, 1, params.order());
          bytes = wire::encode_bundle(bundle, dep.layout);
          tamper({epoch, adv_cfg.mode, node_name(node.id), node.id, "s+=1"});
        } else if (adv_cfg.mode == AdversaryMode::FlipByte) {
          const auto pos = adversary.uniform(0, bytes.size() - 1);
          const auto mask = static_cast<std::uint8_t>(adversary.uniform(1, 255));
          bytes[pos] ^= mask;
          tamper({epoch, adv_cfg.mode, node_name(node.id), node.id,
                  "offset=" + std::to_string(pos) + " mask=" + std::to_string(mask)});
        }
      }
      transmissions.emplace_back(node.id, std::move(bytes));
    }
    rep.bundles_sent = transmissions.size();
    summary.bundles_sent += transmissions.size();

    // Storage verifies and forwards alerts immediately.
    const StorageVerdict verdict = storage_verify(storage, transmissions, epoch, dep);
    rep.aggregate_ok = verdict.aggregate_ok;
    for (const Alert& alert : verdict.alerts) {
      line("alert", kStorageNode,
           "sensor=" + node_name(alert.sensor) + " cause=" + std::string(cause_name(alert.cause)));
      record_detection(
          Detection{epoch, epoch, node_name(alert.sensor), alert.cause, alert.detail});
    }
    authority.note_alerts(epoch, verdict.alerts);

    std::vector<wire::SensorBundle> forwarded = verdict.honest;
    if (active && adv_cfg.storage) {
      if (adv_cfg.mode == AdversaryMode::DropRecord && !forwarded.empty()) {
        const auto idx = adversary.uniform(0, forwarded.size() - 1);
        const SensorId victim = forwarded[idx].record.sensor;
        forwarded.erase(forwarded.begin() + static_cast<std::ptrdiff_t>(idx));
        tamper({epoch, adv_cfg.mode, std::string(kStorageNode), victim,
                "dropped=" + node_name(victim)});
      } else if (adv_cfg.mode == AdversaryMode::Reorder && forwarded.size() >= 2) {
        // Rotate ciphertexts among sensor ids; a non-zero rotation moves
        // every record to another id.
        const auto shift = adversary.uniform(1, forwarded.size() - 1);
        std::vector<wire::SensorRecord> original;
        for (const auto& b : forwarded) original.push_back(b.record);
        for (std::size_t i = 0; i < forwarded.size(); ++i) {
          const wire::SensorRecord& src = original[(i + shift) % forwarded.size()];
          forwarded[i].record.ciphertext = src.ciphertext;
          forwarded[i].record.code_count = src.code_count;
        }
        tamper({epoch, adv_cfg.mode, std::string(kStorageNode), std::nullopt,
                "shift=" + std::to_string(shift)});
      }
    }
    const wire::SecurePayload payload = storage_assemble(storage, forwarded, epoch, dep);
    const Bytes framed = wire::frame_payload(payload, dep.layout);
    stego::StegoImage image =
        storage_conceal(storage, payload, epoch, cfg.cover_width, cfg.cover_height, dep);
    ++summary.payloads_sent;
    rep.records_delivered = payload.sensor_batch.size();
    line("ingest", kStorageNode,
         "records=" + std::to_string(payload.sensor_batch.size()) + " aggregate=" +
             (verdict.aggregate_ok ? "ok" : "reject") + " payload_bytes=" +
             std::to_string(framed.size()) + " capacity=" + std::to_string(stego::capacity(image)));

    // Transport leg: a compromised storage link flips carrier bits.
    if (active && adv_cfg.storage && adv_cfg.mode == AdversaryMode::FlipByte) {
      const std::size_t carrier_bits = stego::kHeaderBits + 8 * framed.size();
      const auto pos = adversary.uniform(0, carrier_bits - 1);
      const auto mask = static_cast<std::uint8_t>(adversary.uniform(0, 127) * 2 + 1);
      image.pixels[pos] ^= mask;
      tamper({epoch, adv_cfg.mode, std::string(kStorageNode), std::nullopt,
              "channel=" + std::to_string(pos) + " mask=" + std::to_string(mask)});
    }

    // Authority.
    const Authority::Received received = authority.receive(image, epoch);
    rep.payload_accepted = received.accepted;
    if (received.accepted) ++summary.payloads_accepted;
    summary.readings_stored += received.stored.size();
    line("receive", "authority",
         std::string("status=") + (received.accepted ? "accepted" : "rejected") + " stored=" +
             std::to_string(received.stored.size()) + " quarantined=" +
             std::to_string(received.quarantined.size()));
    for (SensorId id : received.overwritten) line("store", "authority", "overwrite=" + node_name(id));
    for (const Detection& d : received.detections) record_detection(d);

    // Client query for the current epoch.
    // The window reaches back `staleness` epochs so an available answer
    // covers every sensor; ground truth uses the same window.
    topk::TopKQuery query;
    query.k = cfg.query_k;
    query.window = topk::EpochWindow{epoch - std::min(epoch, cfg.staleness), epoch};
    truth_window.insert(truth_window.end(), truth.begin(), truth.end());
    std::erase_if(truth_window,
                  [&](const topk::Reading& r) { return !query.window.contains(r.epoch); });
    const IssuedAnswer answer = authority.answer(query, epoch, cfg.staleness);
    ++summary.queries;
    if (answer.available) {
      ++summary.queries_available;
      if (answer.result.entries == topk::top_k(truth_window, query).entries) {
        ++summary.queries_correct;
      }
      line("query", "client",
           "k=" + std::to_string(query.k) + " window=" + std::to_string(query.window.lo) + "-" +
               std::to_string(query.window.hi) + " status=ok result=" + answer_string(answer.result));
    } else {
      line("query", "client",
           "k=" + std::to_string(query.k) + " window=" + std::to_string(query.window.lo) + "-" +
               std::to_string(query.window.hi) + " status=unavailable missing=" +
               join_ids(answer.unavailable) + " partial=" + answer_string(answer.result));
    }
    rep.answers.push_back(answer);

    // Periodic audit; the last epoch always closes the books.
    if (auto audit = authority.periodic_verify(epoch, cfg.query_period, epoch + 1 == cfg.epochs)) {
      ++summary.audits;
      summary.audit_findings += audit->findings.size();
      line("audit", "authority",
           "window=" + std::to_string(audit->window.lo) + "-" + std::to_string(audit->window.hi) +
               " payloads=" + std::to_string(audit->payloads_checked) + " answers=" +
               std::to_string(audit->answers_checked) + " findings=" +
               std::to_string(audit->findings.size()));
      for (const Detection& d : audit->findings) record_detection(d);
    }
    report.epochs.push_back(std::move(rep));
  }

  summary.detections = report.detections.size();
  for (const Detection& d : report.detections) ++summary.detections_by_cause[std::string(cause_name(d.cause))];
  summary.tamper_events = report.tamper_log.size();
  for (const TamperEvent& event : report.tamper_log) {
    const bool caught = std::any_of(report.detections.begin(), report.detections.end(),
                                    [&](const Detection& d) { return explains(event, d); });
    if (caught) ++summary.tamper_detected;
  }
  for (const Detection& d : report.detections) {
    const bool explained = std::any_of(report.tamper_log.begin(), report.tamper_log.end(),
                                       [&](const TamperEvent& e) { return explains(e, d); });
    if (!explained) ++summary.false_alarms;
  }
  return report;
}

std::string RunReport::summary_text() const {
  const RunSummary& s = summary;
  std::string out = "# summary\n";
  auto kv = [&out](std::string_view key, std::size_t v) {
    out += std::string(key) + "=" + std::to_string(v) + "\n";
  };
  kv("epochs", s.epochs);
  kv("sensors", s.sensors);
  kv("bundles_sent", s.bundles_sent);
  kv("payloads_sent", s.payloads_sent);
  kv("payloads_accepted", s.payloads_accepted);
  kv("readings_stored", s.readings_stored);
  kv("detections", s.detections);
  for (const auto& [cause, n] : s.detections_by_cause) kv("detections." + cause, n);
  kv("tamper_events", s.tamper_events);
  kv("tamper_detected", s.tamper_detected);
  kv("false_alarms", s.false_alarms);
  kv("queries", s.queries);
  kv("queries_available", s.queries_available);
  kv("queries_correct", s.queries_correct);
  kv("audits", s.audits);
  kv("audit_findings", s.audit_findings);
  return out;
}

std::string RunReport::text() const {
  std::string out = header;
  for (const EpochReport& rep : epochs) {
    for (const std::string& l : rep.lines) {
      out += l;
      out += '\n';
    }
  }
  out += summary_text();
  return out;
}

}  // namespace sectopk::sim
