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

// Wire objects exchanged between tiers.
//
// All integers are big-endian. W is the coordinate width (bytes of p - 1),
// S the scalar width (bytes of n - 1). A point is x then y at W bytes each;
// the point at infinity is 2W zero bytes.
//
// Sensor record (also the exact bytes a sensor signs, prefixed by epoch):
//   4  sensor id
//   2  code count        obfuscated ASCII codes carried by the record
//   2  pair count P
//   P * 4W               Ci1.x Ci1.y Ci2.x Ci2.y per pair
//
// Signed body      = epoch(4) || record
// Sensor bundle    = signed body || R (2W) || s (S)
//
// Secure payload:
//   1  version (= 1)
//   4  epoch
//   2  record count, then each record as above
//   2  commitment count C
//   C * (4 + 2W)         signer id, R
//   S  s_sum
//   32 HMAC-SHA-256 over every preceding byte

#ifndef SECTOPK_FRAME_HPP
#define SECTOPK_FRAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sectopk/authenticity.hpp"
#include "sectopk/bytes.hpp"
#include "sectopk/ec.hpp"

namespace sectopk::wire {

inline constexpr std::uint8_t kPayloadVersion = 1;

struct FrameLayout {
  std::size_t coordinate_width = 8;
  std::size_t scalar_width = 8;

  static FrameLayout for_params(const ec::CurveParams& params) {
    return FrameLayout{params.curve().coordinate_width(), params.scalar_width()};
  }
};

struct SensorRecord {
  auth::SensorId sensor = 0;
  std::uint16_t code_count = 0;
  std::vector<ec::CipherPair> ciphertext;
  friend bool operator==(const SensorRecord&, const SensorRecord&) = default;
};

struct SensorBundle {
  std::uint32_t epoch = 0;
  SensorRecord record;
  auth::SensorSignature signature;
  friend bool operator==(const SensorBundle&, const SensorBundle&) = default;
};

struct SecurePayload {
  std::uint8_t version = kPayloadVersion;
  std::uint32_t epoch = 0;
  std::vector<SensorRecord> sensor_batch;
  auth::AggregateSignature agg_sig;
  auth::MacTag mac;
  friend bool operator==(const SecurePayload&, const SecurePayload&) = default;
};

Bytes signed_body(std::uint32_t epoch, const SensorRecord& record, const FrameLayout& layout);

Bytes encode_bundle(const SensorBundle& bundle, const FrameLayout& layout);
// Throws MalformedFrame on any length or field error.
SensorBundle decode_bundle(std::span<const std::uint8_t> bytes, const FrameLayout& layout);

// Everything the MAC covers.
Bytes payload_body(const SecurePayload& payload, const FrameLayout& layout);
Bytes frame_payload(const SecurePayload& payload, const FrameLayout& layout);
// Strict inverse of frame_payload: unknown version, truncation, trailing
// bytes or out-of-range counts raise MalformedFrame. Does not check the MAC.
SecurePayload unframe_payload(std::span<const std::uint8_t> bytes, const FrameLayout& layout);

// Sets payload.mac from the body bytes.
void seal_payload(SecurePayload& payload, std::span<const std::uint8_t> mac_key,
                  const FrameLayout& layout);
bool verify_payload(const SecurePayload& payload, std::span<const std::uint8_t> mac_key,
                    const FrameLayout& layout);

}  // namespace sectopk::wire

#endif  // SECTOPK_FRAME_HPP
