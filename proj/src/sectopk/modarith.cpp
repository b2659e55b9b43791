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

#include "sectopk/modarith.hpp"

#include <algorithm>
#include <numeric>

namespace sectopk::modarith {

u64 pow(u64 base, u64 exp, u64 m) noexcept {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::optional<u64> inverse(u64 a, u64 m) noexcept {
  using i128 = __int128;
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) noexcept {
  u64 x = pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n, u64 c) {
  auto f = [n, c](u64 x) { return add(mul(x, x, n), c, n); };
  u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
  u64 r = 1;
  constexpr u64 block = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (u64 i = 0; i < std::min(block, r - k); ++i) {
        y = f(y);
        q = mul(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += block;
    }
    r <<= 1U;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    const u64 d = pollard_brent(n, c);
    if (d != n) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : small) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

int legendre(u64 a, u64 p) noexcept {
  a %= p;
  if (a == 0) return 0;
  return pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<u64> sqrt(u64 a, u64 p) noexcept {
  a %= p;
  if (a == 0) return u64{0};
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;

  u64 root;
  if (p % 4 == 3) {
    root = pow(a, (p + 1) / 4, p);
  } else {
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1U) == 0) {
      q >>= 1U;
      ++s;
    }
    u64 z = 2;
    while (legendre(z, p) != -1) ++z;
    unsigned m = s;
    u64 c = pow(z, q, p);
    u64 t = pow(a, q, p);
    root = pow(a, (q + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mul(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) b = mul(b, b, p);
      m = i;
      c = mul(b, b, p);
      t = mul(t, c, p);
      root = mul(root, b, p);
    }
  }
  return std::min(root, p - root);
}

std::vector<u64> factorize(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t byte_width(u64 m) noexcept {
  u64 max_value = m - 1;
  std::size_t width = 1;
  while (max_value > 0xFF) {
    max_value >>= 8U;
    ++width;
  }
  return width;
}

u64 reduce_signed(std::int64_t v, u64 m) noexcept {
  if (v >= 0) return static_cast<u64>(v) % m;
  // Magnitude computed in unsigned space so INT64_MIN does not overflow.
  const u64 magnitude = static_cast<u64>(-(v + 1)) + 1;
  return neg(magnitude % m, m);
}

}  // namespace sectopk::modarith
