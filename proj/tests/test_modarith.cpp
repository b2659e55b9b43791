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


#include <numeric>
#include <random>

#include "doctest.h"
#include "sectopk/modarith.hpp"

namespace ma = sectopk::modarith;
using u64 = std::uint64_t;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

}  // namespace

TEST_CASE("is_prime agrees with a sieve below 200000") {
  const auto table = sieve(200000);
  for (u64 n = 0; n <= 200000; ++n) {
    REQUIRE_MESSAGE(ma::is_prime(n) == table[n], "n = " << n);
  }
}

TEST_CASE("is_prime on large known values") {
  CHECK(ma::is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK(ma::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK(ma::is_prime(4611686018427387113ULL));
  CHECK_FALSE(ma::is_prime(4611686018427387113ULL + 2));
  // strong pseudoprimes to small bases
  CHECK_FALSE(ma::is_prime(3215031751ULL));
  CHECK_FALSE(ma::is_prime(3825123056546413051ULL));
  CHECK_FALSE(ma::is_prime(561));  // Carmichael
  CHECK_FALSE(ma::is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("arithmetic matches 128-bit reference near 2^64") {
  std::mt19937_64 gen(5);
  const u64 m = 18446744073709551557ULL;
  for (int i = 0; i < 20000; ++i) {
    const u64 a = gen() % m;
    const u64 b = gen() % m;
    using u128 = unsigned __int128;
    CHECK(ma::add(a, b, m) == static_cast<u64>((u128(a) + b) % m));
    CHECK(ma::sub(a, b, m) == static_cast<u64>((u128(a) + m - b) % m));
    CHECK(ma::mul(a, b, m) == static_cast<u64>(u128(a) * b % m));
    CHECK(ma::add(ma::neg(a, m), a, m) == 0);
  }
}

TEST_CASE("pow against repeated multiplication") {
  for (u64 m : {2ULL, 7ULL, 151ULL, 1000003ULL}) {
    for (u64 base = 0; base < 40; ++base) {
      u64 acc = 1 % m;
      for (u64 e = 0; e < 60; ++e) {
        REQUIRE(ma::pow(base % m, e, m) == acc);
        acc = ma::mul(acc, base % m, m);
      }
    }
  }
}

TEST_CASE("inverse exists exactly for units") {
  for (u64 m : {2ULL, 12ULL, 151ULL, 360ULL}) {
    for (u64 a = 0; a < m; ++a) {
      const auto inv = ma::inverse(a, m);
      if (std::gcd(a, m) == 1) {
        REQUIRE(inv.has_value());
        CHECK(ma::mul(a, *inv, m) == 1 % m);
      } else {
        CHECK_FALSE(inv.has_value());
      }
    }
  }
  const u64 p = 4611686018427387113ULL;
  std::mt19937_64 gen(9);
  for (int i = 0; i < 1000; ++i) {
    const u64 a = 1 + gen() % (p - 1);
    CHECK(ma::mul(a, *ma::inverse(a, p), p) == 1);
  }
}

TEST_CASE("legendre and sqrt against brute-force squares") {
  for (u64 p : {3ULL, 5ULL, 151ULL, 257ULL, 7681ULL, 65537ULL}) {
    std::vector<int> square(p, 0);
    for (u64 r = 0; r < p; ++r) square[ma::mul(r, r, p)] = 1;
    for (u64 a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (square[a] ? 1 : -1);
      REQUIRE(ma::legendre(a, p) == expected);
      const auto root = ma::sqrt(a, p);
      REQUIRE(root.has_value() == (expected >= 0));
      if (root) {
        CHECK(ma::mul(*root, *root, p) == a);
        CHECK(*root <= p - *root);
      }
    }
  }
}

TEST_CASE("sqrt on the default field") {
  const u64 p = 4611686018427387113ULL;
  std::mt19937_64 gen(3);
  for (int i = 0; i < 2000; ++i) {
    const u64 r = gen() % p;
    const u64 a = ma::mul(r, r, p);
    const auto root = ma::sqrt(a, p);
    REQUIRE(root.has_value());
    CHECK((*root == r || *root == p - r));
  }
}

TEST_CASE("factorize multiplies back to n with prime factors") {
  std::mt19937_64 gen(11);
  std::vector<u64> inputs = {1, 2, 4, 97, 1ULL << 63, 600851475143ULL,
                             4611686015206843939ULL, 4611686018427387113ULL + 1,
                             999999000001ULL * 3ULL, 4294967297ULL};
  for (int i = 0; i < 300; ++i) inputs.push_back(gen() >> (gen() % 60));
  for (u64 n : inputs) {
    if (n == 0) continue;
    const auto f = ma::factorize(n);
    u64 prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(ma::is_prime(f[i]));
      if (i) CHECK(f[i - 1] <= f[i]);
      prod *= f[i];
    }
    CHECK_MESSAGE(prod == n, "n = " << n);
  }
}

TEST_CASE("byte_width and reduce_signed") {
  CHECK(ma::byte_width(2) == 1);
  CHECK(ma::byte_width(256) == 1);
  CHECK(ma::byte_width(257) == 2);
  CHECK(ma::byte_width(4611686018427387113ULL) == 8);
  CHECK(ma::reduce_signed(-1, 151) == 150);
  CHECK(ma::reduce_signed(-302, 151) == 0);
  CHECK(ma::reduce_signed(INT64_MIN, 151) == static_cast<u64>((static_cast<__int128>(INT64_MIN) % 151 + 151) % 151));
  CHECK(ma::reduce_signed(152, 151) == 1);
}
