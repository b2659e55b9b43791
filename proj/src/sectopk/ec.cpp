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

#include "sectopk/ec.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "sectopk/modarith.hpp"
#include "sectopk/rng.hpp"

namespace sectopk::ec {

namespace ma = modarith;
using ma::u128;
using ma::u64;

Curve Curve::create(std::uint64_t p, std::int64_t a, std::int64_t b) {
  if (p < 5 || !ma::is_prime(p)) {
    fail(ErrorCode::InvalidCurve, "curve modulus " + std::to_string(p) +
                                      " is not a prime >= 5");
  }
  return create_reduced(p, ma::reduce_signed(a, p), ma::reduce_signed(b, p));
}

Curve Curve::create_reduced(std::uint64_t p, FieldElement a, FieldElement b) {
  if (p < 5 || !ma::is_prime(p)) {
    fail(ErrorCode::InvalidCurve, "curve modulus " + std::to_string(p) +
                                      " is not a prime >= 5");
  }
  a %= p;
  b %= p;
  // 4a^3 + 27b^2 != 0 (mod p)
  const u64 a3 = ma::mul(ma::mul(a, a, p), a, p);
  const u64 disc = ma::add(ma::mul(4 % p, a3, p), ma::mul(27 % p, ma::mul(b, b, p), p), p);
  if (disc == 0) {
    fail(ErrorCode::InvalidCurve, "singular curve: 4a^3 + 27b^2 = 0 mod p");
  }
  return Curve(p, a, b);
}

FieldElement Curve::rhs(FieldElement x) const {
  const u64 x2 = ma::mul(x, x, p_);
  return ma::add(ma::add(ma::mul(x2, x, p_), ma::mul(a_, x, p_), p_), b_, p_);
}

bool Curve::contains(const CurvePoint& point) const {
  if (point.is_infinity()) return true;
  if (point.x() >= p_ || point.y() >= p_) return false;
  return ma::mul(point.y(), point.y(), p_) == rhs(point.x());
}

std::size_t Curve::coordinate_width() const { return ma::byte_width(p_); }

CurvePoint negate(const CurvePoint& point, const Curve& curve) {
  if (point.is_infinity()) return point;
  return CurvePoint::affine(point.x(), ma::neg(point.y(), curve.p()));
}

CurvePoint point_add(const CurvePoint& lhs, const CurvePoint& rhs, const Curve& curve) {
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;
  const u64 p = curve.p();
  u64 slope;
  if (lhs.x() == rhs.x()) {
    // Vertical chord, or tangent at a point with y = 0.
    if (ma::add(lhs.y(), rhs.y(), p) == 0) return CurvePoint::infinity();
    const u64 num = ma::add(ma::mul(3, ma::mul(lhs.x(), lhs.x(), p), p), curve.a(), p);
    const u64 den = ma::add(lhs.y(), lhs.y(), p);
    slope = ma::mul(num, *ma::inverse(den, p), p);
  } else {
    const u64 num = ma::sub(rhs.y(), lhs.y(), p);
    const u64 den = ma::sub(rhs.x(), lhs.x(), p);
    slope = ma::mul(num, *ma::inverse(den, p), p);
  }
  const u64 x3 = ma::sub(ma::sub(ma::mul(slope, slope, p), lhs.x(), p), rhs.x(), p);
  const u64 y3 = ma::sub(ma::mul(slope, ma::sub(lhs.x(), x3, p), p), lhs.y(), p);
  return CurvePoint::affine(x3, y3);
}

CurvePoint point_sub(const CurvePoint& lhs, const CurvePoint& rhs, const Curve& curve) {
  return point_add(lhs, negate(rhs, curve), curve);
}

CurvePoint scalar_mul(Scalar s, const CurvePoint& point, const Curve& curve) {
  CurvePoint acc = CurvePoint::infinity();
  if (s == 0 || point.is_infinity()) return acc;
  for (int bit = 63 - std::countl_zero(s); bit >= 0; --bit) {
    acc = point_add(acc, acc, curve);
    if ((s >> bit) & 1U) acc = point_add(acc, point, curve);
  }
  return acc;
}

std::size_t CurveParams::scalar_width() const { return ma::byte_width(order_); }

CurveParams CurveParams::create(const Curve& curve, const CurvePoint& base,
                                std::uint64_t order) {
  if (curve.contains(CurvePoint::affine(0, 0))) {
    fail(ErrorCode::InvalidCurve,
         "curves through (0, 0) are unsupported: that encoding denotes infinity");
  }
  if (base.is_infinity() || !curve.contains(base)) {
    fail(ErrorCode::InvalidCurve, "base point " + to_string(base) + " is not on the curve");
  }
  if (order < 2) fail(ErrorCode::InvalidCurve, "base point order must be >= 2");
  if (!scalar_mul(order, base, curve).is_infinity()) {
    fail(ErrorCode::InvalidCurve,
         "order " + std::to_string(order) + " does not annihilate the base point");
  }
  return CurveParams(curve, base, order);
}

CurveParams CurveParams::standard() {
  static const CurveParams params = create(
      Curve::create(4611686018427387113ULL, -1, 1), CurvePoint::affine(0, 1),
      4611686015206843939ULL);
  return params;
}

CurveParams CurveParams::tiny() {
  static const CurveParams params =
      create(Curve::create(151, -1, 1), CurvePoint::affine(0, 1), 139);
  return params;
}

namespace {

struct PointHash {
  std::size_t operator()(const CurvePoint& pt) const noexcept {
    return pt.is_infinity() ? 0x5bd1e995U : mix64(pt.x() * 0x9e3779b97f4a7c15ULL ^ pt.y());
  }
};

u64 isqrt128(u128 v) {
  u64 lo = 0, hi = ~u64{0};
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2 + 1;
    if (static_cast<u128>(mid) * mid <= v) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

// Exact order of `point` given a multiple that annihilates it.
u64 reduce_order(u64 multiple, const CurvePoint& point, const Curve& curve) {
  u64 order = multiple;
  for (u64 f : ma::factorize(multiple)) {
    if (order % f == 0 && scalar_mul(order / f, point, curve).is_infinity()) order /= f;
  }
  return order;
}

// Finds some m in [lo, hi] with m * point = infinity.
std::optional<u64> bsgs_annihilator(const CurvePoint& point, u64 lo, u64 hi,
                                    const Curve& curve) {
  const u64 length = hi - lo + 1;
  const u64 steps = isqrt128(length) + 1;
  std::unordered_map<CurvePoint, u64, PointHash> baby;
  baby.reserve(steps * 2);
  CurvePoint acc = CurvePoint::infinity();
  for (u64 j = 0; j < steps; ++j) {
    baby.try_emplace(acc, j);
    acc = point_add(acc, point, curve);
  }
  const CurvePoint giant = scalar_mul(steps, point, curve);
  CurvePoint t = scalar_mul(lo, point, curve);
  for (u64 i = 0; i <= steps; ++i) {
    if (auto it = baby.find(negate(t, curve)); it != baby.end()) {
      const u128 m = static_cast<u128>(lo) + static_cast<u128>(i) * steps + it->second;
      if (m <= hi) return static_cast<u64>(m);
    }
    t = point_add(t, giant, curve);
  }
  return std::nullopt;
}

}  // namespace

CurveParams CurveParams::derive(const Curve& curve) {
  if (curve == standard().curve()) return standard();
  if (curve == tiny().curve()) return tiny();

  const u64 p = curve.p();
  std::vector<CurvePoint> candidates;
  u64 group_order = 0;

  if (p <= kEnumerationLimit) {
    auto points = enumerate_points(curve);
    group_order = points.size();
    candidates.assign(points.begin() + 1, points.end());
  } else {
    // Hasse: |#E - (p + 1)| <= 2 sqrt(p).
    const u64 w = isqrt128(static_cast<u128>(4) * p) + 1;
    const u128 hi128 = static_cast<u128>(p) + 1 + w;
    if (hi128 >> 64) fail(ErrorCode::InvalidCurve, "group order may exceed 64 bits");
    const u64 lo = p + 1 - w;
    const u64 hi = static_cast<u64>(hi128);
    for (u64 x = 0; x < p && group_order == 0 && candidates.size() < 64; ++x) {
      auto y = ma::sqrt(curve.rhs(x), p);
      if (!y || *y == 0) continue;
      const CurvePoint pt = CurvePoint::affine(x, *y);
      candidates.push_back(pt);
      auto m = bsgs_annihilator(pt, lo, hi, curve);
      if (!m) continue;
      const u64 order = reduce_order(*m, pt, curve);
      // A point whose order exceeds the interval length has exactly one
      // multiple inside it, which must be the group order.
      if (order > hi - lo) group_order = *m;
    }
    if (group_order == 0) {
      fail(ErrorCode::InvalidCurve, "could not determine the group order");
    }
  }

  const u64 largest = ma::factorize(group_order).back();
  const u64 cofactor = group_order / largest;
  for (const CurvePoint& pt : candidates) {
    const CurvePoint base = scalar_mul(cofactor, pt, curve);
    if (!base.is_infinity()) return create(curve, base, largest);
  }
  fail(ErrorCode::InvalidCurve, "no point of prime order found");
}

KeyPair keygen(const CurveParams& params, std::uint64_t seed) {
  DeterministicRng rng(seed);
  const Scalar secret = rng.uniform(1, params.order() - 1);
  return KeyPair{secret, scalar_mul(secret, params.base(), params.curve())};
}

std::uint64_t max_encodable(const Curve& curve, std::uint32_t kappa) {
  if (kappa == 0) fail(ErrorCode::InvalidArgument, "kappa must be positive");
  // (m + 1) * kappa < p  <=>  m + 1 <= (p - 1) / kappa
  const u64 limit = (curve.p() - 1) / kappa;
  if (limit == 0) fail(ErrorCode::InvalidArgument, "kappa too large for the field");
  return limit - 1;
}

CurvePoint encode_message(std::uint64_t m, const Curve& curve, std::uint32_t kappa) {
  if (m > max_encodable(curve, kappa)) {
    fail(ErrorCode::InvalidArgument,
         "encode_message: (m + 1) * kappa must be below p (m = " + std::to_string(m) + ")");
  }
  const u64 start = m * kappa;
  for (u64 j = 0; j < kappa; ++j) {
    const u64 x = start + j;
    if (auto y = ma::sqrt(curve.rhs(x), curve.p())) return CurvePoint::affine(x, *y);
  }
  fail(ErrorCode::EncodingFailure,
       "no curve point with x in [m*kappa, (m+1)*kappa) for m = " + std::to_string(m));
}

std::uint64_t decode_message(const CurvePoint& point, std::uint32_t kappa) {
  if (kappa == 0) fail(ErrorCode::InvalidArgument, "kappa must be positive");
  if (point.is_infinity()) fail(ErrorCode::InfinityPoint, "cannot decode the point at infinity");
  return point.x() / kappa;
}

CipherPair encrypt_with_nonce(const CurvePoint& message, const CurvePoint& public_key,
                              const CurveParams& params, Scalar nonce) {
  const Curve& curve = params.curve();
  if (!curve.contains(message)) fail(ErrorCode::InvalidArgument, "message point not on curve");
  if (!curve.contains(public_key)) fail(ErrorCode::InvalidArgument, "public key not on curve");
  return CipherPair{scalar_mul(nonce, params.base(), curve),
                    point_add(message, scalar_mul(nonce, public_key, curve), curve)};
}

CipherPair encrypt(const CurvePoint& message, const CurvePoint& public_key,
                   const CurveParams& params, std::uint64_t seed) {
  DeterministicRng rng(seed);
  return encrypt_with_nonce(message, public_key, params, rng.uniform(1, params.order() - 1));
}

CurvePoint decrypt(Scalar secret, const CipherPair& ct, const Curve& curve) {
  return point_sub(ct.c2, scalar_mul(secret, ct.c1, curve), curve);
}

std::vector<CurvePoint> enumerate_points(const Curve& curve) {
  const u64 p = curve.p();
  if (p > kEnumerationLimit) {
    fail(ErrorCode::CurveTooLarge, "enumeration requires p <= 2^20, got p = " + std::to_string(p));
  }
  std::vector<CurvePoint> points{CurvePoint::infinity()};
  for (u64 x = 0; x < p; ++x) {
    auto y = ma::sqrt(curve.rhs(x), p);
    if (!y) continue;
    points.push_back(CurvePoint::affine(x, *y));
    if (*y != 0) points.push_back(CurvePoint::affine(x, p - *y));
  }
  return points;
}

std::string points_csv(std::span<const CurvePoint> points) {
  std::string out;
  for (const CurvePoint& pt : points) {
    if (pt.is_infinity()) continue;
    out += std::to_string(pt.x());
    out += ',';
    out += std::to_string(pt.y());
    out += '\n';
  }
  return out;
}

std::string to_string(const CurvePoint& point) {
  if (point.is_infinity()) return "O";
  return "(" + std::to_string(point.x()) + ", " + std::to_string(point.y()) + ")";
}

}  // namespace sectopk::ec
