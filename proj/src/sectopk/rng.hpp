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

#ifndef SECTOPK_RNG_HPP
#define SECTOPK_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace sectopk {

/// Seeded generator whose output is identical on every conforming platform.
///
/// std::mt19937_64's raw sequence is fixed by the standard, but the standard
/// distributions are not, so every derived draw is implemented here.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [lo, hi], rejection sampled.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  // Uniform in [0, 1) with 53 bits of resolution.
  double unit();

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Derives a child seed from a parent seed and a sequence of labels.
std::uint64_t derive_seed(std::uint64_t parent,
                          std::initializer_list<std::uint64_t> labels) noexcept;

}  // namespace sectopk

#endif  // SECTOPK_RNG_HPP
