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

// Round-based simulation of sensors, one storage node, the authority and a
// client, with an adversary that tampers at compromised nodes.
//
// Per-epoch event order is fixed:
//   sensors emit -> adversary (sensors) -> storage ingests
//   -> adversary (storage / transport) -> authority receives
//   -> client queries -> periodic audit
// The whole run is a pure function of the ScenarioConfig.

#ifndef SECTOPK_SIM_HPP
#define SECTOPK_SIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sectopk/authenticity.hpp"
#include "sectopk/ec.hpp"
#include "sectopk/frame.hpp"
#include "sectopk/scenario.hpp"
#include "sectopk/stego.hpp"
#include "sectopk/topk.hpp"

namespace sectopk::sim {

using auth::SensorId;
using topk::Epoch;

enum class DetectionCause {
  MalformedBundle,     // storage could not parse a sensor bundle
  SignatureInvalid,    // storage localized a failing signature
  MalformedHeader,     // authority: stego length header unusable
  MalformedFrame,      // authority: payload framing rejected
  MacMismatch,         // authority: payload MAC rejected
  MissingRecord,       // audit: fewer records than deployed minus alerted
  EvidenceMismatch,    // audit: retained signatures do not cover the records
  RecordInconsistent,  // audit: a record decrypted to another sensor/epoch
  AnswerMismatch,      // audit: an issued answer differs from a recomputation
};

std::string_view cause_name(DetectionCause cause);

struct Detection {
  Epoch logged_epoch = 0;
  Epoch subject_epoch = 0;
  std::string node;  // "s3", "storage"
  DetectionCause cause = DetectionCause::MacMismatch;
  std::string detail;
  friend bool operator==(const Detection&, const Detection&) = default;
};

// Ground truth written by the adversary when it acts.
struct TamperEvent {
  Epoch epoch = 0;
  AdversaryMode mode = AdversaryMode::None;
  std::string node;
  std::optional<SensorId> target;  // sensor whose evidence was touched
  std::string detail;
};

std::string node_name(SensorId sensor);
inline constexpr std::string_view kStorageNode = "storage";

/// Shared deployment constants every tier agrees on.
struct Deployment {
  ec::CurveParams params = ec::CurveParams::standard();
  std::uint32_t kappa = ec::kDefaultKappa;
  double dummy_rate = 0.0;
  std::uint8_t delimiter = 32;
  wire::FrameLayout layout;
  std::size_t chunk_width = 1;

  static Deployment from_config(const ScenarioConfig& cfg);
};

// Reading text: "<sensor><delim><epoch><delim><value with 3 decimals>".
std::string format_reading(const topk::Reading& reading, std::uint8_t delimiter);
// Returns nullopt for anything that does not match that shape exactly.
std::optional<topk::Reading> parse_reading(std::string_view text, std::uint8_t delimiter);

struct SensorNode {
  SensorId id = 0;
  ec::KeyPair keypair;
  ec::CurvePoint authority_key;
  std::string location;
  std::uint64_t dummy_seed = 0;  // shared with the authority
  std::uint64_t nonce_seed = 0;
};

// Encrypts, obfuscates and signs one reading. Deterministic per
// (node, epoch, seeds).
wire::SensorBundle sensor_emit(const SensorNode& node, const topk::Reading& reading,
                               const Deployment& dep);

struct StorageNode {
  std::uint32_t id = 0;
  auth::PublicKeyMap registry;
  std::uint64_t cover_seed = 0;
  Bytes mac_key;
};

struct Alert {
  SensorId sensor = 0;
  DetectionCause cause = DetectionCause::SignatureInvalid;
  std::string detail;
};

struct StorageVerdict {
  std::vector<wire::SensorBundle> honest;  // in arrival order
  std::vector<Alert> alerts;
  bool aggregate_ok = true;
};

// Incoming transmissions: (link sender, raw bundle bytes).
using Transmission = std::pair<SensorId, Bytes>;

// Parse, aggregate, batch-verify, localize on failure.
StorageVerdict storage_verify(const StorageNode& node, std::span<const Transmission> incoming,
                              Epoch epoch, const Deployment& dep);
// Frames the given bundles under a fresh aggregate and seals the MAC.
wire::SecurePayload storage_assemble(const StorageNode& node,
                                     std::span<const wire::SensorBundle> bundles, Epoch epoch,
                                     const Deployment& dep);
stego::StegoImage storage_conceal(const StorageNode& node, const wire::SecurePayload& payload,
                                  Epoch epoch, std::uint32_t width, std::uint32_t height,
                                  const Deployment& dep);

struct IngestResult {
  StorageVerdict verdict;
  wire::SecurePayload payload;
  stego::StegoImage image;
};

// storage_verify + storage_assemble + storage_conceal on the honest path.
IngestResult storage_ingest(const StorageNode& node, std::span<const Transmission> incoming,
                            Epoch epoch, std::uint32_t cover_width, std::uint32_t cover_height,
                            const Deployment& dep);

struct IssuedAnswer {
  Epoch epoch = 0;
  topk::TopKQuery query;
  bool available = false;
  std::vector<SensorId> unavailable;
  topk::TopKResult result;  // partial when unavailable
};

/// Authority state: the only holder of the decryption key.
class Authority {
 public:
  Authority(ec::KeyPair keypair, Bytes mac_key, auth::PublicKeyMap registry,
            std::map<SensorId, std::uint64_t> dummy_seeds, Deployment dep);

  struct Received {
    bool accepted = false;
    std::vector<topk::Reading> stored;
    std::vector<SensorId> overwritten;
    std::vector<SensorId> quarantined;
    std::vector<Detection> detections;
  };

  // extract -> unframe -> MAC -> decrypt -> decode -> strip -> parse -> store.
  // Never throws on adversarial input; failures become detections.
  Received receive(const stego::StegoImage& img, Epoch epoch);

  // Storage-side alerts forwarded immediately; they adjust the expected
  // record count for the audit.
  void note_alerts(Epoch epoch, std::span<const Alert> alerts);

  IssuedAnswer answer(const topk::TopKQuery& query, Epoch epoch, std::uint32_t staleness);

  struct AuditReport {
    topk::EpochWindow window;
    std::size_t payloads_checked = 0;
    std::size_t answers_checked = 0;
    std::vector<Detection> findings;
  };

  // Runs when (epoch + 1) % period == 0, or when forced (end of run). Covers
  // every epoch since the previous audit.
  std::optional<AuditReport> periodic_verify(Epoch epoch, std::uint32_t period,
                                             bool force = false);

  const topk::Datastore& datastore() const { return store_; }
  const ec::CurvePoint& public_key() const { return keypair_.public_key; }
  std::vector<SensorId> deployed() const;

 private:
  struct Evidence {
    bool accepted = false;
    wire::SecurePayload payload;
    std::vector<SensorId> quarantined;
    std::size_t alerted = 0;
  };

  std::optional<topk::Reading> open_record(const wire::SensorRecord& record, Epoch epoch) const;

  ec::KeyPair keypair_;
  Bytes mac_key_;
  auth::PublicKeyMap registry_;
  std::map<SensorId, std::uint64_t> dummy_seeds_;
  Deployment dep_;
  topk::Datastore store_;
  std::map<Epoch, Evidence> evidence_;
  std::vector<IssuedAnswer> issued_;
  std::size_t audited_answers_ = 0;
  std::optional<Epoch> next_audit_start_ = Epoch{0};
};

struct EpochReport {
  Epoch epoch = 0;
  std::size_t bundles_sent = 0;
  std::size_t records_delivered = 0;
  bool aggregate_ok = true;
  bool payload_accepted = false;
  std::vector<Detection> detections;
  std::vector<IssuedAnswer> answers;
  std::vector<std::string> lines;  // "epoch|event_type|node|detail"
};

struct RunSummary {
  std::uint32_t epochs = 0;
  std::uint32_t sensors = 0;
  std::size_t bundles_sent = 0;
  std::size_t payloads_sent = 0;
  std::size_t payloads_accepted = 0;
  std::size_t readings_stored = 0;
  std::map<std::string, std::size_t> detections_by_cause;
  std::size_t detections = 0;
  std::size_t tamper_events = 0;
  std::size_t tamper_detected = 0;
  std::size_t false_alarms = 0;
  std::size_t queries = 0;
  std::size_t queries_available = 0;
  std::size_t queries_correct = 0;
  std::size_t audits = 0;
  std::size_t audit_findings = 0;
};

struct RunReport {
  std::string header;
  std::vector<EpochReport> epochs;
  std::vector<TamperEvent> tamper_log;
  std::vector<Detection> detections;
  RunSummary summary;

  std::string summary_text() const;
  // Header, every event line, then the summary block.
  std::string text() const;
};

// Whether `detection` is an expected consequence of `event`.
bool explains(const TamperEvent& event, const Detection& detection);

RunReport run_scenario(const ScenarioConfig& config);

}  // namespace sectopk::sim

#endif  // SECTOPK_SIM_HPP
