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

#include "sectopk/frame.hpp"

#include <limits>
#include <string>

namespace sectopk::wire {

namespace {

std::uint16_t checked_count(std::size_t n, const char* what) {
  if (n > std::numeric_limits<std::uint16_t>::max()) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " count exceeds 65535");
  }
  return static_cast<std::uint16_t>(n);
}

void write_record(ByteWriter& w, const SensorRecord& record, const FrameLayout& layout) {
  w.u32(record.sensor);
  w.u16(record.code_count);
  w.u16(checked_count(record.ciphertext.size(), "cipher pair"));
  for (const ec::CipherPair& pair : record.ciphertext) {
    w.point(pair.c1, layout.coordinate_width);
    w.point(pair.c2, layout.coordinate_width);
  }
}

SensorRecord read_record(ByteReader& r, const FrameLayout& layout) {
  SensorRecord record;
  record.sensor = r.u32();
  record.code_count = r.u16();
  const std::uint16_t pairs = r.u16();
  if (r.remaining() < static_cast<std::size_t>(pairs) * 4 * layout.coordinate_width) {
    fail(ErrorCode::MalformedFrame, "pair count exceeds remaining bytes");
  }
  record.ciphertext.reserve(pairs);
  for (std::uint16_t i = 0; i < pairs; ++i) {
    ec::CipherPair pair;
    pair.c1 = r.point(layout.coordinate_width);
    pair.c2 = r.point(layout.coordinate_width);
    record.ciphertext.push_back(pair);
  }
  return record;
}

}  // namespace

Bytes signed_body(std::uint32_t epoch, const SensorRecord& record, const FrameLayout& layout) {
  ByteWriter w;
  w.u32(epoch);
  write_record(w, record, layout);
  return w.take();
}

Bytes encode_bundle(const SensorBundle& bundle, const FrameLayout& layout) {
  ByteWriter w;
  w.u32(bundle.epoch);
  write_record(w, bundle.record, layout);
  w.point(bundle.signature.commitment, layout.coordinate_width);
  w.uint(bundle.signature.s, layout.scalar_width);
  return w.take();
}

SensorBundle decode_bundle(std::span<const std::uint8_t> bytes, const FrameLayout& layout) {
  ByteReader r(bytes);
  SensorBundle bundle;
  bundle.epoch = r.u32();
  bundle.record = read_record(r, layout);
  bundle.signature.commitment = r.point(layout.coordinate_width);
  bundle.signature.s = r.uint(layout.scalar_width);
  bundle.signature.signer = bundle.record.sensor;
  if (!r.done()) fail(ErrorCode::MalformedFrame, "trailing bytes after sensor bundle");
  return bundle;
}

Bytes payload_body(const SecurePayload& payload, const FrameLayout& layout) {
  ByteWriter w;
  w.u8(payload.version);
  w.u32(payload.epoch);
  w.u16(checked_count(payload.sensor_batch.size(), "record"));
  for (const SensorRecord& record : payload.sensor_batch) write_record(w, record, layout);
  w.u16(checked_count(payload.agg_sig.commitments.size(), "commitment"));
  for (const auto& [id, commitment] : payload.agg_sig.commitments) {
    w.u32(id);
    w.point(commitment, layout.coordinate_width);
  }
  w.uint(payload.agg_sig.s_sum, layout.scalar_width);
  return w.take();
}

Bytes frame_payload(const SecurePayload& payload, const FrameLayout& layout) {
  if (payload.mac.bytes.size() != auth::kDigestSize) {
    fail(ErrorCode::InvalidArgument, "payload MAC must be sealed before framing");
  }
  Bytes out = payload_body(payload, layout);
  out.insert(out.end(), payload.mac.bytes.begin(), payload.mac.bytes.end());
  return out;
}

SecurePayload unframe_payload(std::span<const std::uint8_t> bytes, const FrameLayout& layout) {
  ByteReader r(bytes);
  SecurePayload payload;
  payload.version = r.u8();
  if (payload.version != kPayloadVersion) {
    fail(ErrorCode::MalformedFrame, "unsupported payload version " + std::to_string(payload.version));
  }
  payload.epoch = r.u32();
  const std::uint16_t records = r.u16();
  payload.sensor_batch.reserve(records);
  for (std::uint16_t i = 0; i < records; ++i) payload.sensor_batch.push_back(read_record(r, layout));
  const std::uint16_t commitments = r.u16();
  if (r.remaining() < static_cast<std::size_t>(commitments) * (4 + 2 * layout.coordinate_width)) {
    fail(ErrorCode::MalformedFrame, "commitment count exceeds remaining bytes");
  }
  for (std::uint16_t i = 0; i < commitments; ++i) {
    const auth::SensorId id = r.u32();
    payload.agg_sig.commitments.emplace_back(id, r.point(layout.coordinate_width));
  }
  payload.agg_sig.s_sum = r.uint(layout.scalar_width);
  auto mac = r.raw(auth::kDigestSize);
  payload.mac.bytes.assign(mac.begin(), mac.end());
  if (!r.done()) fail(ErrorCode::MalformedFrame, "trailing bytes after payload MAC");
  return payload;
}

void seal_payload(SecurePayload& payload, std::span<const std::uint8_t> mac_key,
                  const FrameLayout& layout) {
  payload.mac = auth::mac_digest(payload_body(payload, layout), mac_key);
}

bool verify_payload(const SecurePayload& payload, std::span<const std::uint8_t> mac_key,
                    const FrameLayout& layout) {
  return auth::mac_verify(payload_body(payload, layout), mac_key, payload.mac);
}

}  // namespace sectopk::wire
