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

#ifndef SECTOPK_BYTES_HPP
#define SECTOPK_BYTES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sectopk/ec.hpp"
#include "sectopk/error.hpp"

namespace sectopk {

using Bytes = std::vector<std::uint8_t>;

// Big-endian writer for the wire formats.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { uint(v, 2); }
  void u32(std::uint32_t v) { uint(v, 4); }

  void uint(std::uint64_t v, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) {
      out_.push_back(i >= 8 ? 0 : static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  void raw(std::span<const std::uint8_t> bytes) {
    out_.insert(out_.end(), bytes.begin(), bytes.end());
  }

  // Fixed-width x then y; infinity is all zeros.
  void point(const ec::CurvePoint& pt, std::size_t width) {
    uint(pt.is_infinity() ? 0 : pt.x(), width);
    uint(pt.is_infinity() ? 0 : pt.y(), width);
  }

  const Bytes& data() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Reader counterpart; any underrun or oversized field raises MalformedFrame.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(uint(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(uint(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(uint(4)); }

  std::uint64_t uint(std::size_t width) {
    need(width);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
      const std::uint8_t byte = in_[pos_++];
      if (width - i > 8 && byte != 0) fail(ErrorCode::MalformedFrame, "integer field exceeds 64 bits");
      v = (v << 8) | byte;
    }
    return v;
  }

  std::span<const std::uint8_t> raw(std::size_t n) {
    need(n);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  ec::CurvePoint point(std::size_t width) {
    const std::uint64_t x = uint(width);
    const std::uint64_t y = uint(width);
    if (x == 0 && y == 0) return ec::CurvePoint::infinity();
    return ec::CurvePoint::affine(x, y);
  }

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) {
      fail(ErrorCode::MalformedFrame, "truncated input at byte " + std::to_string(pos_));
    }
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> bytes);
Bytes from_hex(std::string_view hex);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace sectopk

#endif  // SECTOPK_BYTES_HPP
