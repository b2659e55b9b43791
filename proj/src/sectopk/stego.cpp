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

#include "sectopk/stego.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "sectopk/rng.hpp"

namespace sectopk::stego {

StegoImage StegoImage::blank(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) fail(ErrorCode::InvalidArgument, "image dimensions must be positive");
  return StegoImage{width, height,
                    std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height * 3, 0)};
}

StegoImage StegoImage::synthetic(std::uint32_t width, std::uint32_t height, std::uint64_t seed) {
  StegoImage img = blank(width, height);
  DeterministicRng rng(seed);
  std::size_t i = 0;
  for (std::uint32_t row = 0; row < height; ++row) {
    for (std::uint32_t col = 0; col < width; ++col) {
      const std::uint32_t base_r = 255U * col / width;
      const std::uint32_t base_g = 255U * row / height;
      const std::uint32_t base_b = 128U;
      for (std::uint32_t base : {base_r, base_g, base_b}) {
        const auto noise = static_cast<std::int32_t>(rng.uniform(0, 16)) - 8;
        const std::int32_t v = static_cast<std::int32_t>(base) + noise;
        img.pixels[i++] = static_cast<std::uint8_t>(v < 0 ? 0 : (v > 255 ? 255 : v));
      }
    }
  }
  return img;
}

std::size_t capacity(const StegoImage& img) {
  const std::size_t channels = img.channel_count();
  return channels < kHeaderBits ? 0 : (channels - kHeaderBits) / 8;
}

StegoImage embed_lsb(const StegoImage& cover, std::span<const std::uint8_t> data) {
  const std::size_t needed_bits = kHeaderBits + 8 * data.size();
  if (cover.channel_count() < needed_bits || 8 * data.size() > 0xFFFFFFFFULL) {
    fail(ErrorCode::InsufficientCapacity,
         "cover holds " + std::to_string(capacity(cover)) + " bytes, payload needs " +
             std::to_string(data.size()));
  }
  StegoImage out = cover;
  auto put = [&out](std::size_t pos, unsigned bit) {
    out.pixels[pos] = static_cast<std::uint8_t>((out.pixels[pos] & 0xFEU) | bit);
  };
  const auto bit_length = static_cast<std::uint32_t>(8 * data.size());
  for (std::size_t i = 0; i < kHeaderBits; ++i) put(i, (bit_length >> (kHeaderBits - 1 - i)) & 1U);
  std::size_t pos = kHeaderBits;
  for (std::uint8_t byte : data) {
    for (int b = 7; b >= 0; --b) put(pos++, (byte >> b) & 1U);
  }
  return out;
}

Bytes extract_lsb(const StegoImage& img) {
  const std::size_t channels = img.channel_count();
  if (channels < kHeaderBits) fail(ErrorCode::MalformedHeader, "image too small for a length header");
  std::uint64_t bit_length = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i) bit_length = (bit_length << 1) | (img.pixels[i] & 1U);
  if (bit_length > channels - kHeaderBits) {
    fail(ErrorCode::MalformedHeader, "header claims " + std::to_string(bit_length) +
                                         " bits but the image carries " +
                                         std::to_string(channels - kHeaderBits));
  }
  if (bit_length % 8 != 0) fail(ErrorCode::MalformedHeader, "header length is not whole bytes");
  Bytes out(bit_length / 8, 0);
  std::size_t pos = kHeaderBits;
  for (std::uint8_t& byte : out) {
    for (int b = 0; b < 8; ++b) byte = static_cast<std::uint8_t>((byte << 1) | (img.pixels[pos++] & 1U));
  }
  return out;
}

Bytes write_ppm(const StegoImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

namespace {

class PpmHeaderParser {
 public:
  explicit PpmHeaderParser(std::span<const std::uint8_t> in) : in_(in) {}

  void skip_space_and_comments() {
    while (pos_ < in_.size()) {
      if (std::isspace(in_[pos_])) {
        ++pos_;
      } else if (in_[pos_] == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < in_.size() && std::isdigit(in_[pos_])) {
      v = v * 10 + (in_[pos_++] - '0');
      if (++digits > 9) fail(ErrorCode::MalformedImage, std::string("PPM ") + what + " too large");
    }
    if (digits == 0) fail(ErrorCode::MalformedImage, std::string("PPM ") + what + " missing");
    return v;
  }

  std::size_t pos_ = 0;
  std::span<const std::uint8_t> in_;
};

}  // namespace

StegoImage read_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    fail(ErrorCode::MalformedImage, "not a binary PPM (missing P6 magic)");
  }
  PpmHeaderParser p(bytes);
  p.pos_ = 2;
  const std::uint64_t width = p.number("width");
  const std::uint64_t height = p.number("height");
  const std::uint64_t maxval = p.number("maxval");
  if (width == 0 || height == 0) fail(ErrorCode::MalformedImage, "PPM dimensions must be positive");
  if (maxval != 255) fail(ErrorCode::MalformedImage, "only maxval 255 is supported");
  if (p.pos_ >= bytes.size() || !std::isspace(bytes[p.pos_])) {
    fail(ErrorCode::MalformedImage, "PPM header must end with a single whitespace byte");
  }
  ++p.pos_;
  const std::uint64_t expected = width * height * 3;
  if (bytes.size() - p.pos_ != expected) {
    fail(ErrorCode::MalformedImage, "PPM raster has " + std::to_string(bytes.size() - p.pos_) +
                                        " bytes, expected " + std::to_string(expected));
  }
  StegoImage img;
  img.width = static_cast<std::uint32_t>(width);
  img.height = static_cast<std::uint32_t>(height);
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(p.pos_), bytes.end());
  return img;
}

void save_ppm(const StegoImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  const Bytes data = write_ppm(img);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

StegoImage load_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  const Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_ppm(data);
}

}  // namespace sectopk::stego
