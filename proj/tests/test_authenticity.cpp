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


#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <random>

#include "doctest.h"
#include "sectopk/authenticity.hpp"

using namespace sectopk;

namespace {

Bytes repeat(std::uint8_t b, std::size_t n) { return Bytes(n, b); }

Bytes openssl_hmac(const Bytes& key, const Bytes& msg) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(), out, &len);
  return Bytes(out, out + len);
}

Bytes random_bytes(std::mt19937_64& gen, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(gen());
  return b;
}

struct Batch {
  ec::CurveParams params = ec::CurveParams::standard();
  std::vector<ec::KeyPair> keys;
  auth::PublicKeyMap registry;
  auth::MessageMap messages;
  std::vector<auth::SensorSignature> sigs;

  explicit Batch(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto id = static_cast<auth::SensorId>(i + 1);
      keys.push_back(ec::keygen(params, 100 + i));
      registry[id] = keys.back().public_key;
      messages[id] = to_bytes("reading from sensor " + std::to_string(id));
      sigs.push_back(auth::schnorr_sign(messages[id], keys.back(), id, params, 900 + i));
    }
  }
};

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(to_hex(auth::sha256(to_bytes(""))) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(auth::sha256(to_bytes("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("HMAC-SHA256 RFC 4231 vectors") {
  struct Vector {
    Bytes key;
    Bytes data;
    std::string mac;
  };
  const std::vector<Vector> vectors = {
      {repeat(0x0b, 20), to_bytes("Hi There"),
       "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7"},
      {to_bytes("Jefe"), to_bytes("what do ya want for nothing?"),
       "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843"},
      {repeat(0xaa, 20), repeat(0xdd, 50),
       "773ea91e36800e46854db8ebd09181a72959098b3ef8c122d9635514ced565fe"},
      {from_hex("0102030405060708090a0b0c0d0e0f10111213141516171819"), repeat(0xcd, 50),
       "82558a389a443c0ea4cc819899f2083a85f0faa3e578f8077a2e3ff46729665b"},
      {repeat(0x0c, 20), to_bytes("Test With Truncation"),
       "a3b6167473100ee06e0c796c2955552b"},  // truncated to 128 bits
      {repeat(0xaa, 131), to_bytes("Test Using Larger Than Block-Size Key - Hash Key First"),
       "60e431591ee0b67f0d8a26aacbf5b77f8e0bc6213728c5140546040f0ee37f54"},
      {repeat(0xaa, 131),
       to_bytes("This is a test using a larger than block-size key and a larger than "
                "block-size data. The key needs to be hashed before being used by the "
                "HMAC algorithm."),
       "9b09ffa71b942fcb27635fbcd5b0e944bfdc63644f0713938a7f51535c3a35e2"},
  };
  for (const auto& v : vectors) {
    const auto tag = auth::mac_digest(v.data, v.key);
    CHECK(tag.bytes.size() == auth::kDigestSize);
    CHECK(to_hex(tag.bytes).substr(0, v.mac.size()) == v.mac);
  }
}

TEST_CASE("HMAC agrees with OpenSSL across key and message lengths") {
  std::mt19937_64 gen(77);
  for (std::size_t key_len : {1, 31, 32, 63, 64, 65, 128, 200}) {
    for (std::size_t msg_len = 0; msg_len < 300; msg_len += 7) {
      const Bytes key = random_bytes(gen, key_len);
      const Bytes msg = random_bytes(gen, msg_len);
      REQUIRE(auth::mac_digest(msg, key).bytes == openssl_hmac(key, msg));
    }
  }
}

TEST_CASE("mac_verify rejects every single-bit change") {
  const Bytes key = to_bytes("storage-authority shared key");
  const Bytes msg = to_bytes("payload body under protection");
  const auth::MacTag tag = auth::mac_digest(msg, key);
  CHECK(auth::mac_verify(msg, key, tag));
  for (std::size_t i = 0; i < tag.bytes.size() * 8; ++i) {
    auth::MacTag bad = tag;
    bad.bytes[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
    CHECK_FALSE(auth::mac_verify(msg, key, bad));
  }
  for (std::size_t i = 0; i < msg.size() * 8; ++i) {
    Bytes bad = msg;
    bad[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
    CHECK_FALSE(auth::mac_verify(bad, key, tag));
  }
  for (std::size_t i = 0; i < key.size() * 8; ++i) {
    Bytes bad = key;
    bad[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
    CHECK_FALSE(auth::mac_verify(msg, bad, tag));
  }
  auth::MacTag short_tag = tag;
  short_tag.bytes.pop_back();
  CHECK_FALSE(auth::mac_verify(msg, key, short_tag));
  CHECK_FALSE(auth::mac_verify(msg, key, auth::MacTag{}));
}

TEST_CASE("empty MAC key is refused") {
  try {
    auth::mac_digest(to_bytes("x"), Bytes{});
    FAIL("empty key accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyKey);
  }
}

TEST_CASE("schnorr sign and verify") {
  Batch b(1);
  const auto& msg = b.messages[1];
  const auto& sig = b.sigs[0];
  const auto& Q = b.registry[1];
  CHECK(auth::schnorr_verify(msg, sig, Q, b.params));
  CHECK(sig.signer == 1);
  // s X == R + e Q
  const auto e = auth::challenge(sig.commitment, Q, msg, b.params);
  CHECK(ec::scalar_mul(sig.s, b.params.base(), b.params.curve()) ==
        ec::point_add(sig.commitment, ec::scalar_mul(e, Q, b.params.curve()), b.params.curve()));

  for (std::size_t i = 0; i < msg.size() * 8; i += 3) {
    Bytes bad = msg;
    bad[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
    CHECK_FALSE(auth::schnorr_verify(bad, sig, Q, b.params));
  }
  auto forged = sig;
  forged.s = (sig.s + 1) % b.params.order();
  CHECK_FALSE(auth::schnorr_verify(msg, forged, Q, b.params));
  forged = sig;
  forged.s = b.params.order();  // out of range
  CHECK_FALSE(auth::schnorr_verify(msg, forged, Q, b.params));
  forged = sig;
  forged.commitment = ec::CurvePoint::affine(sig.commitment.x(), sig.commitment.y() ^ 1);
  CHECK_FALSE(auth::schnorr_verify(msg, forged, Q, b.params));
  CHECK_FALSE(auth::schnorr_verify(msg, sig, ec::keygen(b.params, 1).public_key, b.params));
  // deterministic given the seed
  const auto again = auth::schnorr_sign(msg, b.keys[0], 1, b.params, 900);
  CHECK(again.s == sig.s);
  CHECK(again.commitment == sig.commitment);
}

TEST_CASE("aggregate verifies honest batches") {
  Batch b(6);
  const auto agg = auth::aggregate(b.sigs, b.params);
  CHECK(agg.commitments.size() == 6);
  CHECK(auth::aggregate_verify(agg, b.messages, b.registry, b.params));
  auto bad = agg;
  bad.s_sum = (agg.s_sum + 1) % b.params.order();
  CHECK_FALSE(auth::aggregate_verify(bad, b.messages, b.registry, b.params));
  bad = agg;
  bad.s_sum = b.params.order();
  CHECK_FALSE(auth::aggregate_verify(bad, b.messages, b.registry, b.params));
  auto other = b.messages;
  other[3].push_back('!');
  CHECK_FALSE(auth::aggregate_verify(agg, other, b.registry, b.params));
  CHECK_FALSE(auth::aggregate_verify(auth::AggregateSignature{}, b.messages, b.registry, b.params));
}

TEST_CASE("aggregate errors") {
  Batch b(3);
  try {
    auth::aggregate(std::span<const auth::SensorSignature>{}, b.params);
    FAIL("empty batch aggregated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyBatch);
  }
  auto dup = b.sigs;
  dup.push_back(b.sigs[0]);
  try {
    auth::aggregate(dup, b.params);
    FAIL("duplicate signer aggregated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateSigner);
  }
  const auto agg = auth::aggregate(b.sigs, b.params);
  auto missing = b.registry;
  missing.erase(2);
  try {
    auth::aggregate_verify(agg, b.messages, missing, b.params);
    FAIL("missing signer accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingSigner);
  }
}

TEST_CASE("every forged subset of six signers is localized exactly") {
  Batch b(6);
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto sigs = b.sigs;
    std::vector<auth::SensorId> expected;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask & (1u << i)) {
        sigs[i].s = (sigs[i].s + 1 + i) % b.params.order();
        expected.push_back(static_cast<auth::SensorId>(i + 1));
      }
    }
    const auto agg = auth::aggregate(sigs, b.params);
    CHECK(auth::aggregate_verify(agg, b.messages, b.registry, b.params) == (mask == 0));
    CHECK(auth::localize_forgery(sigs, b.messages, b.registry, b.params) == expected);
  }
}
