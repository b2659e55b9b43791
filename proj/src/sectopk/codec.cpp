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

#include "sectopk/codec.hpp"

#include "sectopk/error.hpp"
#include "sectopk/rng.hpp"

namespace sectopk::codec {

namespace {

void check_rate(double rate) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    fail(ErrorCode::InvalidArgument, "dummy rate must lie in [0, 1)");
  }
}

}  // namespace

AsciiStream to_ascii(std::string_view text) {
  AsciiStream out;
  out.codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto code = static_cast<unsigned char>(text[i]);
    if (code > 127) {
      fail(ErrorCode::NonAsciiCharacter,
           "non-ASCII byte " + std::to_string(code) + " at offset " + std::to_string(i));
    }
    out.codes.push_back(code);
  }
  return out;
}

std::string from_ascii(const AsciiStream& stream) {
  std::string out;
  out.reserve(stream.codes.size());
  for (std::uint8_t code : stream.codes) {
    if (code > 127) fail(ErrorCode::NonAsciiCharacter, "code outside 7-bit range");
    out += static_cast<char>(code);
  }
  return out;
}

ObfuscatedStream insert_dummies(const AsciiStream& stream, std::uint64_t seed, double rate) {
  check_rate(rate);
  DeterministicRng rng(seed);
  ObfuscatedStream out{{}, seed, rate};
  out.codes.reserve(stream.codes.size() + stream.codes.size() / 2);
  for (std::uint8_t code : stream.codes) {
    if (rng.bernoulli(rate)) {
      out.codes.push_back(static_cast<std::uint8_t>(rng.uniform(kDummyLow, kDummyHigh)));
    }
    out.codes.push_back(code);
  }
  return out;
}

AsciiStream strip_dummies(const ObfuscatedStream& stream, std::uint64_t seed, double rate) {
  check_rate(rate);
  DeterministicRng rng(seed);
  AsciiStream out;
  const auto& codes = stream.codes;
  std::size_t i = 0;
  while (i < codes.size()) {
    if (rng.bernoulli(rate)) {
      const auto expected = static_cast<std::uint8_t>(rng.uniform(kDummyLow, kDummyHigh));
      if (codes[i] != expected) {
        fail(ErrorCode::LengthMismatch,
             "decoy slot " + std::to_string(i) + " disagrees with the regenerated plan");
      }
      ++i;
      if (i == codes.size()) {
        fail(ErrorCode::LengthMismatch, "stream ends on a decoy with no following code");
      }
    }
    out.codes.push_back(codes[i]);
    ++i;
  }
  return out;
}

std::size_t chunk_bytes(const ec::Curve& curve, std::uint32_t kappa) {
  const std::uint64_t max_m = ec::max_encodable(curve, kappa);
  std::size_t width = 0;
  while (width < 8 && (width + 1 == 8 ? max_m == ~std::uint64_t{0}
                                      : (std::uint64_t{1} << (8 * (width + 1))) - 1 <= max_m)) {
    ++width;
  }
  if (width == 0) {
    fail(ErrorCode::InvalidArgument,
         "field too small: no single byte is encodable with kappa = " + std::to_string(kappa));
  }
  return width;
}

std::vector<std::uint64_t> pack_chunks(std::span<const std::uint8_t> bytes, std::size_t width) {
  if (width == 0 || width > 8) fail(ErrorCode::InvalidArgument, "chunk width must be 1..8");
  std::vector<std::uint64_t> chunks;
  chunks.reserve((bytes.size() + width - 1) / width);
  for (std::size_t start = 0; start < bytes.size(); start += width) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < width; ++j) {
      const std::size_t idx = start + j;
      v = (v << 8) | (idx < bytes.size() ? bytes[idx] : 0);
    }
    chunks.push_back(v);
  }
  return chunks;
}

std::vector<std::uint8_t> unpack_chunks(std::span<const std::uint64_t> chunks,
                                        std::size_t width, std::size_t count) {
  if (width == 0 || width > 8) fail(ErrorCode::InvalidArgument, "chunk width must be 1..8");
  if (chunks.size() != (count + width - 1) / width) {
    fail(ErrorCode::LengthMismatch, std::to_string(chunks.size()) + " chunks cannot carry " +
                                        std::to_string(count) + " bytes");
  }
  std::vector<std::uint8_t> out;
  out.reserve(chunks.size() * width);
  for (std::uint64_t v : chunks) {
    if (width < 8 && (v >> (8 * width)) != 0) {
      fail(ErrorCode::LengthMismatch, "chunk value exceeds its width");
    }
    for (std::size_t j = width; j-- > 0;) out.push_back(static_cast<std::uint8_t>(v >> (8 * j)));
  }
  for (std::size_t i = count; i < out.size(); ++i) {
    if (out[i] != 0) fail(ErrorCode::LengthMismatch, "non-zero chunk padding");
  }
  out.resize(count);
  return out;
}

namespace {

std::uint64_t chunk_span(std::size_t width) {
  if (width == 0 || width > 7) fail(ErrorCode::InvalidArgument, "chunk width must be 1..7");
  return std::uint64_t{1} << (8 * width);
}

}  // namespace

ec::CurvePoint encode_chunk(std::uint64_t value, std::size_t width, const ec::Curve& curve,
                            std::uint32_t kappa) {
  const std::uint64_t span = chunk_span(width);
  if (value >= span) fail(ErrorCode::InvalidArgument, "chunk value exceeds its width");
  const std::uint64_t max_m = ec::max_encodable(curve, kappa);
  for (std::uint64_t m = value;; m += span) {
    try {
      return ec::encode_message(m, curve, kappa);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EncodingFailure || max_m - m < span) throw;
    }
  }
}

std::uint64_t decode_chunk(const ec::CurvePoint& point, std::size_t width, std::uint32_t kappa) {
  return ec::decode_message(point, kappa) % chunk_span(width);
}

}  // namespace sectopk::codec
