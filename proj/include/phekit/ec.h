/*
 * Copyright 2026 The phekit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PHEKIT_EC_H_
#define PHEKIT_EC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phekit/natural.h"

namespace phekit::ec {

// Affine point on a short Weierstrass curve, or the point at infinity.
class CurvePoint {
 public:
  static CurvePoint Identity() { return CurvePoint(); }
  CurvePoint(Natural x, Natural y)
      : identity_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool is_identity() const { return identity_; }
  const Natural& x() const { return x_; }
  const Natural& y() const { return y_; }

  friend bool operator==(const CurvePoint& lhs, const CurvePoint& rhs) {
    if (lhs.identity_ || rhs.identity_) return lhs.identity_ == rhs.identity_;
    return lhs.x_ == rhs.x_ && lhs.y_ == rhs.y_;
  }

 private:
  CurvePoint() = default;

  bool identity_ = true;
  Natural x_;
  Natural y_;
};

// y^2 = x^3 + a*x + b over GF(p), with base point 'generator' of prime order
// 'order'.
struct CurveParams {
  std::string name;
  Natural p;
  Natural a;
  Natural b;
  CurvePoint generator;
  Natural order;

  unsigned bits() const { return static_cast<unsigned>(BitLength(p)); }
};

bool IsOnCurve(const CurvePoint& point, const CurveParams& curve);

CurvePoint Negate(const CurvePoint& point, const CurveParams& curve);

// Group law: chord rule for distinct points, tangent rule for doubling.
CurvePoint PointAdd(const CurvePoint& lhs, const CurvePoint& rhs,
                    const CurveParams& curve);

// k*P by double-and-add, with k reduced modulo the curve order first.
CurvePoint ScalarMul(const Natural& k, const CurvePoint& point,
                     const CurveParams& curve);

// Smallest m in [0, bound] with m*base = target, by baby-step giant-step over
// the curve group. The search is capped at order - 1.
std::optional<std::uint64_t> DiscreteLogBounded(const CurvePoint& base,
                                                const CurvePoint& target,
                                                const CurveParams& curve,
                                                std::uint64_t bound);

// Registry lookup. Throws LookupError listing the registered names.
const CurveParams& GetCurve(std::string_view name);
std::vector<std::string> CurveNames();

// Registry curve for a NIST ECC key size (160, 224, 256, 384).
const CurveParams& CurveForKeySize(unsigned bits);

}  // namespace phekit::ec

#endif  // PHEKIT_EC_H_
