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

// Least-significant-bit steganography over 8-bit RGB rasters, plus a binary
// PPM (P6) reader and writer. The carrier is lossless on purpose: any lossy
// re-encoding would destroy the hidden bits.
//
// Carrier layout: channel bytes are visited in row-major R, G, B order. The
// first 32 LSBs hold the payload length in bits (big-endian), followed by the
// payload bits, most significant bit of each byte first.

#ifndef SECTOPK_STEGO_HPP
#define SECTOPK_STEGO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sectopk/bytes.hpp"

namespace sectopk::stego {

inline constexpr std::size_t kHeaderBits = 32;

struct StegoImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 3

  static StegoImage blank(std::uint32_t width, std::uint32_t height);
  // Smooth gradient plus seeded noise, so covers look like natural images.
  static StegoImage synthetic(std::uint32_t width, std::uint32_t height, std::uint64_t seed);

  std::size_t channel_count() const { return pixels.size(); }
  friend bool operator==(const StegoImage&, const StegoImage&) = default;
};

// floor((width * height * 3 - 32) / 8), or 0 when the header cannot fit.
std::size_t capacity(const StegoImage& img);

// Throws InsufficientCapacity.
StegoImage embed_lsb(const StegoImage& cover, std::span<const std::uint8_t> data);
// Throws MalformedHeader when the header does not describe a whole number of
// bytes that fits in the image.
Bytes extract_lsb(const StegoImage& img);

Bytes write_ppm(const StegoImage& img);
// Throws MalformedImage.
StegoImage read_ppm(std::span<const std::uint8_t> bytes);

void save_ppm(const StegoImage& img, const std::filesystem::path& path);
StegoImage load_ppm(const std::filesystem::path& path);

}  // namespace sectopk::stego

#endif  // SECTOPK_STEGO_HPP
