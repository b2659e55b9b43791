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

#ifndef SECTOPK_CODEC_HPP
#define SECTOPK_CODEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sectopk/ec.hpp"

namespace sectopk::codec {

inline constexpr std::uint8_t kSpaceDelimiter = 32;
inline constexpr std::uint8_t kUnitSeparator = 31;

// Dummies are drawn from the printable range minus space, so neither
// delimiter can ever be produced as a decoy.
inline constexpr std::uint8_t kDummyLow = 33;
inline constexpr std::uint8_t kDummyHigh = 126;

struct AsciiStream {
  std::vector<std::uint8_t> codes;
  friend bool operator==(const AsciiStream&, const AsciiStream&) = default;
};

struct ObfuscatedStream {
  std::vector<std::uint8_t> codes;
  std::uint64_t dummy_seed = 0;
  double dummy_rate = 0.0;
};

// Throws NonAsciiCharacter for any byte above 127.
AsciiStream to_ascii(std::string_view text);
std::string from_ascii(const AsciiStream& stream);

/// Before each real code a decoy is inserted with probability `rate`. The
/// positions and decoy values come from DeterministicRng(seed), so a receiver
/// holding the same (seed, rate) regenerates the plan and removes them.
ObfuscatedStream insert_dummies(const AsciiStream& stream, std::uint64_t seed, double rate);

// Throws LengthMismatch when the stream disagrees with the regenerated plan
// (wrong length, or a decoy slot holding an unexpected value).
AsciiStream strip_dummies(const ObfuscatedStream& stream, std::uint64_t seed, double rate);

// Largest B such that every B-byte big-endian integer is encodable.
std::size_t chunk_bytes(const ec::Curve& curve, std::uint32_t kappa);

// Splits into B-byte big-endian integers; the last is zero padded.
std::vector<std::uint64_t> pack_chunks(std::span<const std::uint8_t> bytes, std::size_t width);

// Inverse of pack_chunks for `count` bytes. Throws LengthMismatch if the chunk
// count, chunk range or padding is inconsistent with `count`.
std::vector<std::uint8_t> unpack_chunks(std::span<const std::uint64_t> chunks,
                                        std::size_t width, std::size_t count);

// Chunk <-> point. Headroom between 256^width and max_encodable is spent on
// retry tags: m = value + tag * 256^width, tag counting up until an embedding
// exists. Throws EncodingFailure only when every tag fails.
ec::CurvePoint encode_chunk(std::uint64_t value, std::size_t width, const ec::Curve& curve,
                            std::uint32_t kappa);
// m mod 256^width. Throws InfinityPoint.
std::uint64_t decode_chunk(const ec::CurvePoint& point, std::size_t width, std::uint32_t kappa);

}  // namespace sectopk::codec

#endif  // SECTOPK_CODEC_HPP
