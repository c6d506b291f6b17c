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

#include "phekit/ec.h"

#include <array>
#include <string>
#include <unordered_map>

#include "phekit/errors.h"
#include "phekit/numtheory.h"

namespace phekit::ec {

namespace {

Natural Reduce(const Natural& value, const Natural& p) {
  Natural out = value % p;
  if (out < 0) out += p;
  return out;
}

Natural Hex(const char* digits) { return Natural(digits, 16); }

CurveParams MakeCurve(const char* name, const char* p, const char* a,
                      const char* b, const char* gx, const char* gy,
                      const char* order) {
  return CurveParams{name, Hex(p), Hex(a), Hex(b),
                     CurvePoint(Hex(gx), Hex(gy)), Hex(order)};
}

// SEC 2 / FIPS 186 domain parameters, plus the textbook toy curve
// y^2 = x^3 + 2x + 2 over GF(17) whose base point (5, 1) has order 19.
const std::array<CurveParams, 5>& Registry() {
  static const std::array<CurveParams, 5> curves = {
      MakeCurve("toy17", "11", "2", "2", "5", "1", "13"),
      MakeCurve("secp160r1", "ffffffffffffffffffffffffffffffff7fffffff",
                "ffffffffffffffffffffffffffffffff7ffffffc",
                "1c97befc54bd7a8b65acf89f81d4d4adc565fa45",
                "4a96b5688ef573284664698968c38bb913cbfc82",
                "23a628553168947d59dcc912042351377ac5fb32",
                "0100000000000000000001f4c8f927aed3ca752257"),
      MakeCurve("secp224r1",
                "ffffffffffffffffffffffffffffffff000000000000000000000001",
                "fffffffffffffffffffffffffffffffefffffffffffffffffffffffe",
                "b4050a850c04b3abf54132565044b0b7d7bfd8ba270b39432355ffb4",
                "b70e0cbd6bb4bf7f321390b94a03c1d356c21122343280d6115c1d21",
                "bd376388b5f723fb4c22dfe6cd4375a05a07476444d5819985007e34",
                "ffffffffffffffffffffffffffff16a2e0b8f03e13dd29455c5c2a3d"),
      MakeCurve(
          "secp256r1",
          "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
          "ffffffff00000001000000000000000000000000fffffffffffffffffffffffc",
          "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
          "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
          "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
          "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551"),
      MakeCurve("secp384r1",
                "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff"
                "effffffff0000000000000000ffffffff",
                "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff"
                "effffffff0000000000000000fffffffc",
                "b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f501387"
                "5ac656398d8a2ed19d2a85c8edd3ec2aef",
                "aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a"
                "385502f25dbf55296c3a545e3872760ab7",
                "3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8"
                "c00a60b1ce1d7e819d7a431d7c90ea0e5f",
                "ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372dd"
                "f581a0db248b0a77aecec196accc52973"),
  };
  return curves;
}

std::string PointKey(const CurvePoint& point) {
  if (point.is_identity()) return "inf";
  return point.x().get_str(32) + ":" + point.y().get_str(32);
}

}  // namespace

bool IsOnCurve(const CurvePoint& point, const CurveParams& curve) {
  if (point.is_identity()) return true;
  const Natural& x = point.x();
  const Natural& y = point.y();
  if (x < 0 || y < 0 || x >= curve.p || y >= curve.p) return false;
  Natural lhs = y * y % curve.p;
  Natural rhs = Reduce(x * x * x + curve.a * x + curve.b, curve.p);
  return lhs == rhs;
}

CurvePoint Negate(const CurvePoint& point, const CurveParams& curve) {
  if (point.is_identity()) return point;
  return CurvePoint(point.x(), Reduce(-point.y(), curve.p));
}

CurvePoint PointAdd(const CurvePoint& lhs, const CurvePoint& rhs,
                    const CurveParams& curve) {
  if (lhs.is_identity()) return rhs;
  if (rhs.is_identity()) return lhs;
  const Natural& p = curve.p;

  Natural slope;
  if (lhs.x() == rhs.x()) {
    // Vertical line: P + (-P), including doubling a point with y = 0.
    if (Reduce(lhs.y() + rhs.y(), p) == 0) return CurvePoint::Identity();
    Natural numerator = Reduce(3 * lhs.x() * lhs.x() + curve.a, p);
    slope = numerator * nt::ModInverse(2 * lhs.y(), p) % p;
  } else {
    Natural numerator = Reduce(rhs.y() - lhs.y(), p);
    Natural denominator = Reduce(rhs.x() - lhs.x(), p);
    slope = numerator * nt::ModInverse(denominator, p) % p;
  }
  Natural x = Reduce(slope * slope - lhs.x() - rhs.x(), p);
  Natural y = Reduce(slope * (lhs.x() - x) - lhs.y(), p);
  return CurvePoint(std::move(x), std::move(y));
}

CurvePoint ScalarMul(const Natural& k, const CurvePoint& point,
                     const CurveParams& curve) {
  if (k < 0) throw DomainError("scalar_mul: negative scalars are not supported");
  const Natural scalar = k % curve.order;
  CurvePoint acc = CurvePoint::Identity();
  const auto bits = BitLength(scalar);
  for (std::size_t i = bits; i-- > 0;) {
    acc = PointAdd(acc, acc, curve);
    if (mpz_tstbit(scalar.get_mpz_t(), i)) acc = PointAdd(acc, point, curve);
  }
  return acc;
}

std::optional<std::uint64_t> DiscreteLogBounded(const CurvePoint& base,
                                                const CurvePoint& target,
                                                const CurveParams& curve,
                                                std::uint64_t bound) {
  if (curve.order - 1 < bound) bound = curve.order.get_ui() - 1;
  std::uint64_t step = 1;
  while (step * step <= bound) ++step;

  std::unordered_map<std::string, std::uint64_t> baby;
  baby.reserve(step * 2);
  CurvePoint walk = CurvePoint::Identity();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(PointKey(walk), j);
    walk = PointAdd(walk, base, curve);
  }
  const CurvePoint giant = Negate(walk, curve);

  CurvePoint gamma = target;
  for (std::uint64_t i = 0; i <= bound / step; ++i) {
    auto hit = baby.find(PointKey(gamma));
    if (hit != baby.end()) {
      std::uint64_t m = i * step + hit->second;
      if (m <= bound) return m;
      return std::nullopt;
    }
    gamma = PointAdd(gamma, giant, curve);
  }
  return std::nullopt;
}

const CurveParams& GetCurve(std::string_view name) {
  for (const CurveParams& curve : Registry()) {
    if (curve.name == name) return curve;
  }
  std::string known;
  for (const std::string& n : CurveNames()) {
    known += known.empty() ? n : ", " + n;
  }
  throw LookupError("unknown curve '" + std::string(name) +
                    "'; available: " + known);
}

std::vector<std::string> CurveNames() {
  std::vector<std::string> out;
  for (const CurveParams& curve : Registry()) out.push_back(curve.name);
  return out;
}

const CurveParams& CurveForKeySize(unsigned bits) {
  switch (bits) {
    case 160:
      return GetCurve("secp160r1");
    case 224:
      return GetCurve("secp224r1");
    case 256:
      return GetCurve("secp256r1");
    case 384:
      return GetCurve("secp384r1");
    default:
      throw LookupError("no registry curve for ECC key size " +
                        std::to_string(bits) +
                        "; use 160, 224, 256, 384 or --curve");
  }
}

}  // namespace phekit::ec
