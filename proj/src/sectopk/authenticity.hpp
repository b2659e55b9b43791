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

// HMAC-SHA-256 payload tags and Schnorr signatures over the ec curves, with
// batch verification of summed signatures and per-signer fallback.
//
// SHA-256 is the only hash in the library. HMAC tags are 32 bytes. Schnorr
// challenges are e = SHA-256(R || Q || m) read as a big-endian integer and
// reduced mod n; the reduction bias is accepted at desk scale.

#ifndef SECTOPK_AUTHENTICITY_HPP
#define SECTOPK_AUTHENTICITY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sectopk/bytes.hpp"
#include "sectopk/ec.hpp"

namespace sectopk::auth {

inline constexpr std::size_t kDigestSize = 32;
inline constexpr std::size_t kHashBlockSize = 64;

using Digest = std::array<std::uint8_t, kDigestSize>;
using SensorId = std::uint32_t;

Digest sha256(std::span<const std::uint8_t> data);

struct MacTag {
  Bytes bytes;
  friend bool operator==(const MacTag&, const MacTag&) = default;
};

MacTag mac_digest(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key);
bool mac_verify(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key,
                const MacTag& tag);

struct SensorSignature {
  ec::CurvePoint commitment;  // R = r * X
  ec::Scalar s = 0;
  SensorId signer = 0;
  friend bool operator==(const SensorSignature&, const SensorSignature&) = default;
};

struct AggregateSignature {
  std::vector<std::pair<SensorId, ec::CurvePoint>> commitments;
  ec::Scalar s_sum = 0;
  friend bool operator==(const AggregateSignature&, const AggregateSignature&) = default;
};

using MessageMap = std::map<SensorId, Bytes>;
using PublicKeyMap = std::map<SensorId, ec::CurvePoint>;

// Bytes hashed for the challenge: R.x, R.y, Q.x, Q.y at coordinate width,
// then the raw message.
Bytes challenge_input(const ec::CurvePoint& commitment, const ec::CurvePoint& public_key,
                      std::span<const std::uint8_t> message, const ec::Curve& curve);
ec::Scalar challenge(const ec::CurvePoint& commitment, const ec::CurvePoint& public_key,
                     std::span<const std::uint8_t> message, const ec::CurveParams& params);

SensorSignature schnorr_sign(std::span<const std::uint8_t> message, const ec::KeyPair& keypair,
                             SensorId signer, const ec::CurveParams& params,
                             std::uint64_t seed);

// Malformed signatures (R off-curve, s >= n) are rejected, never thrown.
bool schnorr_verify(std::span<const std::uint8_t> message, const SensorSignature& sig,
                    const ec::CurvePoint& public_key, const ec::CurveParams& params);

// Throws EmptyBatch / DuplicateSigner.
AggregateSignature aggregate(std::span<const SensorSignature> sigs,
                             const ec::CurveParams& params);

// s_sum * X == sum R_i + sum e_i * Q_i. Throws MissingSigner when a signer
// has no message or key.
bool aggregate_verify(const AggregateSignature& agg, const MessageMap& messages,
                      const PublicKeyMap& public_keys, const ec::CurveParams& params);

// Ids whose individual signature fails, in input order.
std::vector<SensorId> localize_forgery(std::span<const SensorSignature> sigs,
                                       const MessageMap& messages,
                                       const PublicKeyMap& public_keys,
                                       const ec::CurveParams& params);

}  // namespace sectopk::auth

#endif  // SECTOPK_AUTHENTICITY_HPP
