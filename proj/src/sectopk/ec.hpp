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

// Prime-field short Weierstrass curves y^2 = x^3 + ax + b with affine
// chord-and-tangent arithmetic, and ElGamal encryption over them.
//
// Everything here is variable-time and intended for desk-scale curves
// (p < 2^64). Nothing in this header holds global state.

#ifndef SECTOPK_EC_HPP
#define SECTOPK_EC_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sectopk/error.hpp"

namespace sectopk::ec {

using FieldElement = std::uint64_t;
using Scalar = std::uint64_t;

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;
inline constexpr std::uint32_t kDefaultKappa = 16;

class CurvePoint {
 public:
  constexpr CurvePoint() = default;  // point at infinity

  static constexpr CurvePoint infinity() { return CurvePoint{}; }
  static constexpr CurvePoint affine(FieldElement x, FieldElement y) {
    return CurvePoint(x, y);
  }

  constexpr bool is_infinity() const { return infinity_; }
  constexpr FieldElement x() const { return x_; }
  constexpr FieldElement y() const { return y_; }

  // Infinity orders first, then by (x, y).
  friend constexpr bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend constexpr std::strong_ordering operator<=>(const CurvePoint& l,
                                                    const CurvePoint& r) {
    if (l.infinity_ != r.infinity_) return l.infinity_ ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (auto c = l.x_ <=> r.x_; c != 0) return c;
    return l.y_ <=> r.y_;
  }

 private:
  constexpr CurvePoint(FieldElement x, FieldElement y)
      : infinity_(false), x_(x), y_(y) {}

  bool infinity_ = true;
  FieldElement x_ = 0;
  FieldElement y_ = 0;
};

/// Curve equation over F_p. Construction validates that p is a prime >= 5 and
/// that the curve is non-singular.
class Curve {
 public:
  static Curve create(std::uint64_t p, std::int64_t a, std::int64_t b);
  static Curve create_reduced(std::uint64_t p, FieldElement a, FieldElement b);

  std::uint64_t p() const { return p_; }
  FieldElement a() const { return a_; }
  FieldElement b() const { return b_; }

  // x^3 + ax + b mod p
  FieldElement rhs(FieldElement x) const;
  bool contains(const CurvePoint& point) const;

  // Bytes per serialized coordinate.
  std::size_t coordinate_width() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Curve(std::uint64_t p, FieldElement a, FieldElement b) : p_(p), a_(a), b_(b) {}

  std::uint64_t p_;
  FieldElement a_;
  FieldElement b_;
};

/// A curve together with a base point X of known order n.
class CurveParams {
 public:
  // Checks X on the curve, n * X = infinity, n >= 2, and that (0, 0) is not
  // a curve point (the all-zero encoding is reserved for infinity).
  static CurveParams create(const Curve& curve, const CurvePoint& base,
                            std::uint64_t order);

  // y^2 = x^3 - x + 1 over p = 4611686018427387113 (the largest prime below
  // 2^62 whose group order is prime). n = 4611686015206843939, X = (0, 1).
  static CurveParams standard();

  // Same equation over p = 151; the group has prime order 139 and X = (0, 1).
  // Small enough for exhaustive checks over every point, key and nonce.
  static CurveParams tiny();

  // Picks a base point generating the largest prime-order subgroup. Counts
  // points exhaustively for p <= 2^20, otherwise by baby-step giant-step over
  // the Hasse interval.
  static CurveParams derive(const Curve& curve);

  const Curve& curve() const { return curve_; }
  const CurvePoint& base() const { return base_; }
  std::uint64_t order() const { return order_; }
  std::size_t scalar_width() const;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;

 private:
  CurveParams(const Curve& curve, const CurvePoint& base, std::uint64_t order)
      : curve_(curve), base_(base), order_(order) {}

  Curve curve_;
  CurvePoint base_;
  std::uint64_t order_;
};

struct KeyPair {
  Scalar secret = 0;
  CurvePoint public_key;
};

struct CipherPair {
  CurvePoint c1;  // k * X
  CurvePoint c2;  // M + k * Q

  friend bool operator==(const CipherPair&, const CipherPair&) = default;
};

CurvePoint negate(const CurvePoint& point, const Curve& curve);
CurvePoint point_add(const CurvePoint& lhs, const CurvePoint& rhs, const Curve& curve);
CurvePoint point_sub(const CurvePoint& lhs, const CurvePoint& rhs, const Curve& curve);

// Left-to-right double-and-add.
CurvePoint scalar_mul(Scalar s, const CurvePoint& point, const Curve& curve);

// Signed scalars are accepted only when non-negative.
template <std::signed_integral T>
CurvePoint scalar_mul(T s, const CurvePoint& point, const Curve& curve) {
  if (s < 0) fail(ErrorCode::NegativeScalar, "scalar_mul: negative scalar");
  return scalar_mul(static_cast<Scalar>(s), point, curve);
}

// Secret drawn uniformly from [1, n-1].
KeyPair keygen(const CurveParams& params, std::uint64_t seed);

/// Koblitz embedding: x is searched in [m*kappa, (m+1)*kappa) for a value
/// whose right-hand side is a square. Requires (m+1)*kappa < p.
CurvePoint encode_message(std::uint64_t m, const Curve& curve,
                          std::uint32_t kappa = kDefaultKappa);
std::uint64_t decode_message(const CurvePoint& point,
                             std::uint32_t kappa = kDefaultKappa);

// Largest m accepted by encode_message.
std::uint64_t max_encodable(const Curve& curve, std::uint32_t kappa = kDefaultKappa);

// Ephemeral k uniform in [1, n-1] from the seeded stream.
CipherPair encrypt(const CurvePoint& message, const CurvePoint& public_key,
                   const CurveParams& params, std::uint64_t seed);
CipherPair encrypt_with_nonce(const CurvePoint& message, const CurvePoint& public_key,
                              const CurveParams& params, Scalar nonce);

// Ci2 - c * Ci1.
CurvePoint decrypt(Scalar secret, const CipherPair& ct, const Curve& curve);

// Infinity first, then affine points sorted by (x, y). Throws CurveTooLarge
// when p exceeds kEnumerationLimit.
std::vector<CurvePoint> enumerate_points(const Curve& curve);

// "x,y\n" per affine point; infinity is skipped.
std::string points_csv(std::span<const CurvePoint> points);

std::string to_string(const CurvePoint& point);

}  // namespace sectopk::ec

#endif  // SECTOPK_EC_HPP
