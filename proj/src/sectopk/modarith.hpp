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

#ifndef SECTOPK_MODARITH_HPP
#define SECTOPK_MODARITH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sectopk::modarith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// All operands are expected reduced into [0, m). Intermediates use 128 bits,
// so any modulus below 2^64 is supported.

inline u64 add(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>((static_cast<u128>(a) + b) % m);
}

inline u64 sub(u64 a, u64 b, u64 m) noexcept {
  return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + m - b);
}

inline u64 neg(u64 a, u64 m) noexcept { return a == 0 ? 0 : m - a; }

inline u64 mul(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow(u64 base, u64 exp, u64 m) noexcept;

// Inverse by extended Euclid. Returns nullopt when gcd(a, m) != 1.
std::optional<u64> inverse(u64 a, u64 m) noexcept;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

// Euler's criterion for odd prime p: 1 residue, -1 non-residue, 0 for a == 0.
int legendre(u64 a, u64 p) noexcept;

// Tonelli-Shanks. Returns a root r with r <= p - r, or nullopt for a
// non-residue.
std::optional<u64> sqrt(u64 a, u64 p) noexcept;

// Prime factors with multiplicity, ascending (Pollard rho, Brent variant).
std::vector<u64> factorize(u64 n);

// Minimal number of bytes needed to write values in [0, m).
std::size_t byte_width(u64 m) noexcept;

// Reduces a signed coefficient into [0, m).
u64 reduce_signed(std::int64_t v, u64 m) noexcept;

}  // namespace sectopk::modarith

#endif  // SECTOPK_MODARITH_HPP
