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


#include "sectopk/tools.hpp"

#include <cmath>

#include "sectopk/authenticity.hpp"
#include "sectopk/codec.hpp"
#include "sectopk/ec.hpp"
#include "sectopk/error.hpp"
#include "sectopk/frame.hpp"
#include "sectopk/rng.hpp"
#include "sectopk/stego.hpp"

namespace sectopk::tools {

const std::vector<KeySizeRow>& key_size_rows() {
  static const std::vector<KeySizeRow> rows = {
      {1, 80, 1024, "160-223"},
      {2, 112, 2048, "224-255"},
      {3, 128, 3072, "256-383"},
      {4, 192, 7680, "384-511"},
      {5, 256, 15360, "512+"},
  };
  return rows;
}

std::string keys_table() {
  std::string out =
      "S.No\tSymmetric Key Size (in Bits)\tRSA Key Size (In Bits)\tECC Key Size (in Bits)\n";
  for (const KeySizeRow& r : key_size_rows()) {
    out += std::to_string(r.serial) + '\t' + std::to_string(r.symmetric_bits) + '\t' +
           std::to_string(r.rsa_bits) + '\t' + std::string(r.ecc_bits) + '\n';
  }
  return out;
}

std::string curve_points_csv(std::uint64_t p, std::int64_t a, std::int64_t b) {
  if (p > ec::kEnumerationLimit) {
    fail(ErrorCode::CurveTooLarge,
         "p = " + std::to_string(p) + " exceeds enumeration limit " +
             std::to_string(ec::kEnumerationLimit));
  }
  const ec::Curve curve = ec::Curve::create(p, a, b);
  return ec::points_csv(ec::enumerate_points(curve));
}

namespace {

constexpr auth::SensorId kDemoSensor = 1;
constexpr double kDemoDummyRate = 0.25;

}  // namespace

DemoResult demo(std::string_view text, std::uint64_t seed) {
  const ec::CurveParams params = ec::CurveParams::standard();
  const ec::Curve& curve = params.curve();
  const wire::FrameLayout layout = wire::FrameLayout::for_params(params);
  const std::size_t width = codec::chunk_bytes(curve, ec::kDefaultKappa);
  const ec::KeyPair authority = ec::keygen(params, derive_seed(seed, {1}));
  const ec::KeyPair sensor = ec::keygen(params, derive_seed(seed, {2}));
  const std::uint64_t dummy_seed = derive_seed(seed, {3});
  Bytes mac_key(32);
  DeterministicRng key_rng(derive_seed(seed, {4}));
  for (auto& b : mac_key) b = static_cast<std::uint8_t>(key_rng.uniform(0, 255));

  DemoResult out;
  auto step = [&out](std::string_view stage, const std::string& what) {
    out.transcript += std::string(stage) + ": " + what + "\n";
  };
  step("input", std::to_string(text.size()) + " chars");

  const codec::AsciiStream ascii = codec::to_ascii(text);
  step("ascii", std::to_string(ascii.codes.size()) + " codes");
  const codec::ObfuscatedStream obf = codec::insert_dummies(ascii, dummy_seed, kDemoDummyRate);
  step("dummies", std::to_string(obf.codes.size()) + " codes (" +
                      std::to_string(obf.codes.size() - ascii.codes.size()) + " decoys)");
  if (obf.codes.size() > 0xFFFF) fail(ErrorCode::InvalidArgument, "message too long");

  wire::SensorRecord record;
  record.sensor = kDemoSensor;
  record.code_count = static_cast<std::uint16_t>(obf.codes.size());
  const auto chunks = codec::pack_chunks(obf.codes, width);
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    record.ciphertext.push_back(ec::encrypt(codec::encode_chunk(chunks[i], width, curve, ec::kDefaultKappa),
                                            authority.public_key, params,
                                            derive_seed(seed, {5, i})));
  }
  step("encrypt", std::to_string(chunks.size()) + " chunks of " + std::to_string(width) +
                      " bytes -> " + std::to_string(record.ciphertext.size()) + " cipher pairs");

  const std::uint32_t epoch = 0;
  const Bytes body = wire::signed_body(epoch, record, layout);
  const auth::SensorSignature sig =
      auth::schnorr_sign(body, sensor, kDemoSensor, params, derive_seed(seed, {6}));
  step("sign", "signed body " + std::to_string(body.size()) + " bytes");

  wire::SecurePayload payload;
  payload.epoch = epoch;
  payload.sensor_batch.push_back(record);
  const std::vector<auth::SensorSignature> sigs{sig};
  payload.agg_sig = auth::aggregate(sigs, params);
  wire::seal_payload(payload, mac_key, layout);
  const Bytes framed = wire::frame_payload(payload, layout);
  step("frame", std::to_string(framed.size()) + " bytes");

  // Smallest square cover that fits, at least 16x16.
  const std::size_t channels = stego::kHeaderBits + 8 * framed.size();
  auto side = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(channels) / 3.0)));
  side = std::max<std::uint32_t>(side, 16);
  while (std::size_t{side} * side * 3 < channels) ++side;
  const stego::StegoImage cover = stego::StegoImage::synthetic(side, side, derive_seed(seed, {7}));
  const stego::StegoImage carrier = stego::embed_lsb(cover, framed);
  step("embed", std::to_string(side) + "x" + std::to_string(side) + " cover, " +
                    std::to_string(channels) + " of " + std::to_string(carrier.pixels.size()) +
                    " channels");

  const Bytes extracted = stego::extract_lsb(carrier);
  step("extract", std::to_string(extracted.size()) + " bytes");

  const wire::SecurePayload received = wire::unframe_payload(extracted, layout);
  const bool mac_ok = wire::verify_payload(received, mac_key, layout);
  const auth::MessageMap messages{
      {kDemoSensor, wire::signed_body(received.epoch, received.sensor_batch.at(0), layout)}};
  const auth::PublicKeyMap keys{{kDemoSensor, sensor.public_key}};
  const bool sig_ok = auth::aggregate_verify(received.agg_sig, messages, keys, params);
  step("verify", std::string("mac ") + (mac_ok ? "ok" : "FAILED") + ", signature " +
                     (sig_ok ? "ok" : "FAILED"));
  if (!mac_ok) fail(ErrorCode::InvalidArgument, "demo: MAC verification failed");
  if (!sig_ok) fail(ErrorCode::InvalidArgument, "demo: signature verification failed");

  const wire::SensorRecord& got = received.sensor_batch.at(0);
  std::vector<std::uint64_t> plain;
  for (const ec::CipherPair& ct : got.ciphertext) {
    plain.push_back(codec::decode_chunk(ec::decrypt(authority.secret, ct, curve), width, ec::kDefaultKappa));
  }
  codec::ObfuscatedStream stream;
  stream.codes = codec::unpack_chunks(plain, width, got.code_count);
  step("decrypt", std::to_string(stream.codes.size()) + " codes");
  const codec::AsciiStream stripped = codec::strip_dummies(stream, dummy_seed, kDemoDummyRate);
  step("strip", std::to_string(stripped.codes.size()) + " codes");

  out.recovered = codec::from_ascii(stripped);
  step("recovered", "\"" + out.recovered + "\"");
  step("match", out.recovered == text ? "yes" : "no");
  return out;
}

}  // namespace sectopk::tools
