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


// Brute-force reference implementations shared by the tests and the
// acceptance runner. Deliberately naive: no formulas from the library.

#ifndef SECTOPK_TESTS_ORACLES_HPP
#define SECTOPK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sectopk/ec.hpp"
#include "sectopk/topk.hpp"

namespace oracle {

using sectopk::ec::CurvePoint;

inline std::uint64_t mod(__int128 v, std::uint64_t p) {
  const __int128 r = v % static_cast<__int128>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

// O(p^2): every (x, y) with y^2 = x^3 + ax + b, sorted, infinity excluded.
inline std::vector<CurvePoint> points_double_loop(std::uint64_t p, std::int64_t a, std::int64_t b) {
  std::vector<CurvePoint> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = mod(static_cast<__int128>(x) * x % p * x + static_cast<__int128>(a) * x + b, p);
    for (std::uint64_t y = 0; y < p; ++y) {
      if (static_cast<std::uint64_t>(static_cast<__int128>(y) * y % p) == rhs) {
        out.push_back(CurvePoint::affine(x, y));
      }
    }
  }
  return out;
}

// Tangent at P: scan every slope for the one making x_P a double root of
// rhs(x) - line(x)^2, then scan the points for another one on that line.
inline CurvePoint third_on_tangent(const CurvePoint& P, std::int64_t a,
                                   const std::vector<CurvePoint>& pts, std::uint64_t p) {
  for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
    const __int128 deriv = 3 * static_cast<__int128>(P.x()) * P.x() % p + a -
                           2 * static_cast<__int128>(lambda) * P.y() % p;
    if (mod(deriv, p) != 0) continue;
    for (const CurvePoint& R : pts) {
      if (R.x() == P.x()) continue;
      const __int128 line = static_cast<__int128>(lambda) *
                                mod(static_cast<__int128>(R.x()) - P.x(), p) + P.y();
      if (mod(line, p) == R.y()) return R;
    }
    return P;  // inflection: triple root
  }
  return CurvePoint::infinity();  // vertical tangent (y = 0)
}

inline CurvePoint mirror(const CurvePoint& P, std::uint64_t p) {
  if (P.is_infinity()) return P;
  return CurvePoint::affine(P.x(), P.y() == 0 ? 0 : p - P.y());
}

// Chord-and-tangent sum derived only from geometric searches.
inline CurvePoint add(const CurvePoint& P, const CurvePoint& Q, std::int64_t a,
                      const std::vector<CurvePoint>& pts, std::uint64_t p) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  if (P.x() == Q.x() && mod(static_cast<__int128>(P.y()) + Q.y(), p) == 0) {
    return CurvePoint::infinity();
  }
  if (P == Q) return mirror(third_on_tangent(P, a, pts, p), p);
  // The chord meets the curve at a third point, or is tangent at P or Q.
  auto collinear_third = [&]() -> std::optional<CurvePoint> {
    for (const CurvePoint& R : pts) {
      if (R == P || R == Q) continue;
      const __int128 lhs = static_cast<__int128>(mod(static_cast<__int128>(Q.x()) - P.x(), p)) *
                           mod(static_cast<__int128>(R.y()) - P.y(), p);
      const __int128 rhs = static_cast<__int128>(mod(static_cast<__int128>(Q.y()) - P.y(), p)) *
                           mod(static_cast<__int128>(R.x()) - P.x(), p);
      if (mod(lhs - rhs, p) == 0) return R;
    }
    return std::nullopt;
  };
  if (auto R = collinear_third()) return mirror(*R, p);
  // Tangent at P means the doubled point is P: P + Q = -P. Otherwise -Q.
  return third_on_tangent(P, a, pts, p) == Q ? mirror(P, p) : mirror(Q, p);
}

// Full sort with the documented order, then truncate.
inline std::vector<sectopk::topk::Reading> naive_top_k(std::vector<sectopk::topk::Reading> rows,
                                                       const sectopk::topk::TopKQuery& q) {
  std::vector<sectopk::topk::Reading> kept;
  for (const auto& r : rows) {
    if (r.epoch < q.window.lo || r.epoch > q.window.hi) continue;
    if (q.region && !q.region->count(r.sensor)) continue;
    kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& l, const auto& r) {
    if (l.value != r.value) return l.value > r.value;
    if (l.sensor != r.sensor) return l.sensor < r.sensor;
    return l.epoch < r.epoch;
  });
  if (kept.size() > q.k) kept.resize(q.k);
  return kept;
}

}  // namespace oracle

#endif  // SECTOPK_TESTS_ORACLES_HPP
