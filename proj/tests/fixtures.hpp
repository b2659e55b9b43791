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


// Random instance generators shared by the tests and the acceptance runner.

#ifndef SECTOPK_TESTS_FIXTURES_HPP
#define SECTOPK_TESTS_FIXTURES_HPP

#include <random>

#include "sectopk/frame.hpp"
#include "sectopk/stego.hpp"

namespace fixtures {

using sectopk::Bytes;
namespace ec = sectopk::ec;
namespace wire = sectopk::wire;

// Points are not on any curve; framing does not care. (0, 0) is avoided
// since it shares the infinity encoding.
inline ec::CurvePoint random_point(std::mt19937_64& gen, std::size_t width) {
  if (gen() % 16 == 0) return ec::CurvePoint::infinity();
  const std::uint64_t mask = width >= 8 ? ~0ULL : (1ULL << (8 * width)) - 1;
  return ec::CurvePoint::affine(1 + (gen() & mask) % mask, gen() & mask);
}

inline wire::SecurePayload random_payload(std::mt19937_64& gen, const wire::FrameLayout& layout,
                                          const Bytes& key) {
  wire::SecurePayload p;
  p.epoch = static_cast<std::uint32_t>(gen());
  const std::size_t records = gen() % 5;
  for (std::size_t r = 0; r < records; ++r) {
    wire::SensorRecord rec;
    rec.sensor = static_cast<std::uint32_t>(gen() % 1000);
    rec.code_count = static_cast<std::uint16_t>(gen() % 40);
    const std::size_t pairs = gen() % 4;
    for (std::size_t i = 0; i < pairs; ++i) {
      rec.ciphertext.push_back({random_point(gen, layout.coordinate_width),
                                random_point(gen, layout.coordinate_width)});
    }
    p.sensor_batch.push_back(rec);
  }
  const std::size_t commitments = gen() % 5;
  for (std::size_t i = 0; i < commitments; ++i) {
    p.agg_sig.commitments.emplace_back(static_cast<std::uint32_t>(gen() % 1000),
                                       random_point(gen, layout.coordinate_width));
  }
  p.agg_sig.s_sum = layout.scalar_width >= 8 ? gen() : gen() % (1ULL << (8 * layout.scalar_width));
  wire::seal_payload(p, key, layout);
  return p;
}

inline Bytes random_bytes(std::mt19937_64& gen, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(gen());
  return b;
}

inline sectopk::stego::StegoImage random_image(std::mt19937_64& gen, std::uint32_t w,
                                               std::uint32_t h) {
  sectopk::stego::StegoImage img;
  img.width = w;
  img.height = h;
  img.pixels = random_bytes(gen, std::size_t{w} * h * 3);
  return img;
}

}  // namespace fixtures

#endif  // SECTOPK_TESTS_FIXTURES_HPP
