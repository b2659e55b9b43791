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


#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "sectopk/frame.hpp"

using namespace sectopk;

namespace {

const wire::FrameLayout kLayout{8, 8};
const Bytes kKey = to_bytes("0123456789abcdef0123456789abcdef");

wire::SensorBundle sample_bundle() {
  wire::SensorBundle b;
  b.epoch = 17;
  b.record.sensor = 4;
  b.record.code_count = 13;
  b.record.ciphertext = {{ec::CurvePoint::affine(1, 2), ec::CurvePoint::affine(3, 4)},
                         {ec::CurvePoint::infinity(), ec::CurvePoint::affine(5, 6)}};
  b.signature.commitment = ec::CurvePoint::affine(7, 8);
  b.signature.s = 0x0102030405060708ULL;
  b.signature.signer = 4;
  return b;
}

}  // namespace

TEST_CASE("signed body layout") {
  const auto b = sample_bundle();
  const Bytes body = wire::signed_body(b.epoch, b.record, kLayout);
  CHECK(body.size() == 4 + 4 + 2 + 2 + 2 * 32);
  CHECK(to_hex(Bytes(body.begin(), body.begin() + 12)) == "0000001100000004000d0002");
  // infinity is all zeros
  CHECK(std::all_of(body.begin() + 12 + 32, body.begin() + 12 + 48, [](auto x) { return x == 0; }));
}

TEST_CASE("bundle roundtrip and strict decoding") {
  const auto b = sample_bundle();
  const Bytes bytes = wire::encode_bundle(b, kLayout);
  CHECK(bytes.size() == 76 + 16 + 8);
  CHECK(wire::decode_bundle(bytes, kLayout) == b);
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    CHECK_THROWS_AS(wire::decode_bundle(std::span(bytes).first(n), kLayout), Error);
  }
  Bytes longer = bytes;
  longer.push_back(0);
  CHECK_THROWS_AS(wire::decode_bundle(longer, kLayout), Error);
}

TEST_CASE("payload frame roundtrip") {
  std::mt19937_64 gen(10);
  for (int i = 0; i < 1000; ++i) {
    const auto p = fixtures::random_payload(gen, kLayout, kKey);
    const Bytes framed = wire::frame_payload(p, kLayout);
    const auto back = wire::unframe_payload(framed, kLayout);
    REQUIRE(back == p);
    CHECK(wire::verify_payload(back, kKey, kLayout));
    CHECK(framed.size() == wire::payload_body(p, kLayout).size() + 32);
  }
}

TEST_CASE("framing is injective over random payloads") {
  std::mt19937_64 gen(11);
  std::set<Bytes> seen;
  std::vector<wire::SecurePayload> payloads;
  for (int i = 0; i < 2000; ++i) payloads.push_back(fixtures::random_payload(gen, kLayout, kKey));
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j) dup = payloads[j] == payloads[i];
    if (dup) continue;
    ++distinct;
    seen.insert(wire::frame_payload(payloads[i], kLayout));
  }
  CHECK(seen.size() == distinct);
}

TEST_CASE("every byte corruption is rejected by unframe or MAC") {
  std::mt19937_64 gen(12);
  for (int round = 0; round < 20; ++round) {
    const auto p = fixtures::random_payload(gen, kLayout, kKey);
    const Bytes framed = wire::frame_payload(p, kLayout);
    for (std::size_t i = 0; i < framed.size(); ++i) {
      for (std::uint8_t mask : {0x01, 0x80, 0xff}) {
        Bytes bad = framed;
        bad[i] ^= mask;
        bool rejected = false;
        try {
          rejected = !wire::verify_payload(wire::unframe_payload(bad, kLayout), kKey, kLayout);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::MalformedFrame);
          rejected = true;
        }
        REQUIRE_MESSAGE(rejected, "byte " << i << " mask " << int(mask));
      }
    }
    for (std::size_t n = 0; n < framed.size(); ++n) {
      CHECK_THROWS_AS(wire::unframe_payload(std::span(framed).first(n), kLayout), Error);
    }
    Bytes longer = framed;
    longer.push_back(0);
    CHECK_THROWS_AS(wire::unframe_payload(longer, kLayout), Error);
  }
}

TEST_CASE("unknown version and wrong key") {
  std::mt19937_64 gen(13);
  auto p = fixtures::random_payload(gen, kLayout, kKey);
  Bytes framed = wire::frame_payload(p, kLayout);
  framed[0] = 2;
  CHECK_THROWS_AS(wire::unframe_payload(framed, kLayout), Error);
  CHECK_FALSE(wire::verify_payload(p, to_bytes("another key"), kLayout));
  p.mac.bytes.resize(16);
  CHECK_THROWS_AS(wire::frame_payload(p, kLayout), Error);
}

TEST_CASE("narrow layouts roundtrip") {
  const wire::FrameLayout narrow{1, 1};
  std::mt19937_64 gen(14);
  for (int i = 0; i < 300; ++i) {
    const auto p = fixtures::random_payload(gen, narrow, kKey);
    CHECK(wire::unframe_payload(wire::frame_payload(p, narrow), narrow) == p);
  }
}
