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

#include "sectopk/authenticity.hpp"

#include <openssl/sha.h>

#include <set>
#include <string>

#include "sectopk/modarith.hpp"
#include "sectopk/rng.hpp"

namespace sectopk::auth {

namespace ma = modarith;

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

MacTag mac_digest(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key) {
  if (key.empty()) fail(ErrorCode::EmptyKey, "HMAC key must not be empty");

  std::array<std::uint8_t, kHashBlockSize> block{};
  if (key.size() > kHashBlockSize) {
    const Digest hashed = sha256(key);
    std::copy(hashed.begin(), hashed.end(), block.begin());
  } else {
    std::copy(key.begin(), key.end(), block.begin());
  }

  Bytes inner(kHashBlockSize + message.size());
  for (std::size_t i = 0; i < kHashBlockSize; ++i) inner[i] = block[i] ^ 0x36U;
  std::copy(message.begin(), message.end(), inner.begin() + kHashBlockSize);
  const Digest inner_hash = sha256(inner);

  Bytes outer(kHashBlockSize + kDigestSize);
  for (std::size_t i = 0; i < kHashBlockSize; ++i) outer[i] = block[i] ^ 0x5cU;
  std::copy(inner_hash.begin(), inner_hash.end(), outer.begin() + kHashBlockSize);
  const Digest tag = sha256(outer);
  return MacTag{Bytes(tag.begin(), tag.end())};
}

bool mac_verify(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key,
                const MacTag& tag) {
  const MacTag expected = mac_digest(message, key);
  if (expected.bytes.size() != tag.bytes.size()) return false;
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < tag.bytes.size(); ++i) diff |= expected.bytes[i] ^ tag.bytes[i];
  return diff == 0;
}

Bytes challenge_input(const ec::CurvePoint& commitment, const ec::CurvePoint& public_key,
                      std::span<const std::uint8_t> message, const ec::Curve& curve) {
  const std::size_t width = curve.coordinate_width();
  ByteWriter w;
  w.point(commitment, width);
  w.point(public_key, width);
  w.raw(message);
  return w.take();
}

ec::Scalar challenge(const ec::CurvePoint& commitment, const ec::CurvePoint& public_key,
                     std::span<const std::uint8_t> message, const ec::CurveParams& params) {
  const Digest h = sha256(challenge_input(commitment, public_key, message, params.curve()));
  const std::uint64_t n = params.order();
  std::uint64_t e = 0;
  for (std::uint8_t byte : h) {
    e = static_cast<std::uint64_t>(((static_cast<ma::u128>(e) << 8) | byte) % n);
  }
  return e;
}

SensorSignature schnorr_sign(std::span<const std::uint8_t> message, const ec::KeyPair& keypair,
                             SensorId signer, const ec::CurveParams& params,
                             std::uint64_t seed) {
  const std::uint64_t n = params.order();
  DeterministicRng rng(seed);
  const ec::Scalar r = rng.uniform(1, n - 1);
  const ec::CurvePoint commitment = ec::scalar_mul(r, params.base(), params.curve());
  const ec::Scalar e = challenge(commitment, keypair.public_key, message, params);
  const ec::Scalar s = ma::add(r, ma::mul(e, keypair.secret % n, n), n);
  return SensorSignature{commitment, s, signer};
}

bool schnorr_verify(std::span<const std::uint8_t> message, const SensorSignature& sig,
                    const ec::CurvePoint& public_key, const ec::CurveParams& params) {
  const ec::Curve& curve = params.curve();
  if (sig.s >= params.order()) return false;
  if (!curve.contains(sig.commitment) || !curve.contains(public_key)) return false;
  const ec::Scalar e = challenge(sig.commitment, public_key, message, params);
  const ec::CurvePoint lhs = ec::scalar_mul(sig.s, params.base(), curve);
  const ec::CurvePoint rhs =
      ec::point_add(sig.commitment, ec::scalar_mul(e, public_key, curve), curve);
  return lhs == rhs;
}

AggregateSignature aggregate(std::span<const SensorSignature> sigs,
                             const ec::CurveParams& params) {
  if (sigs.empty()) fail(ErrorCode::EmptyBatch, "cannot aggregate an empty batch");
  const std::uint64_t n = params.order();
  std::set<SensorId> seen;
  AggregateSignature agg;
  agg.commitments.reserve(sigs.size());
  for (const SensorSignature& sig : sigs) {
    if (!seen.insert(sig.signer).second) {
      fail(ErrorCode::DuplicateSigner, "duplicate signer " + std::to_string(sig.signer));
    }
    agg.commitments.emplace_back(sig.signer, sig.commitment);
    agg.s_sum = ma::add(agg.s_sum, sig.s % n, n);
  }
  return agg;
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, SensorId id, const char* what) {
  auto it = map.find(id);
  if (it == map.end()) {
    fail(ErrorCode::MissingSigner, std::string("no ") + what + " for signer " + std::to_string(id));
  }
  return it->second;
}

}  // namespace

bool aggregate_verify(const AggregateSignature& agg, const MessageMap& messages,
                      const PublicKeyMap& public_keys, const ec::CurveParams& params) {
  const ec::Curve& curve = params.curve();
  for (const auto& [id, commitment] : agg.commitments) {
    lookup(messages, id, "message");
    lookup(public_keys, id, "public key");
  }
  if (agg.commitments.empty() || agg.s_sum >= params.order()) return false;

  std::set<SensorId> seen;
  ec::CurvePoint rhs = ec::CurvePoint::infinity();
  for (const auto& [id, commitment] : agg.commitments) {
    if (!seen.insert(id).second) return false;
    const ec::CurvePoint& key = public_keys.at(id);
    if (!curve.contains(commitment) || !curve.contains(key)) return false;
    const ec::Scalar e = challenge(commitment, key, messages.at(id), params);
    rhs = ec::point_add(rhs, commitment, curve);
    rhs = ec::point_add(rhs, ec::scalar_mul(e, key, curve), curve);
  }
  return ec::scalar_mul(agg.s_sum, params.base(), curve) == rhs;
}

std::vector<SensorId> localize_forgery(std::span<const SensorSignature> sigs,
                                       const MessageMap& messages,
                                       const PublicKeyMap& public_keys,
                                       const ec::CurveParams& params) {
  std::vector<SensorId> forged;
  for (const SensorSignature& sig : sigs) {
    const Bytes& message = lookup(messages, sig.signer, "message");
    const ec::CurvePoint& key = lookup(public_keys, sig.signer, "public key");
    if (!schnorr_verify(message, sig, key, params)) forged.push_back(sig.signer);
  }
  return forged;
}

}  // namespace sectopk::auth
