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

#include <string>

#include "phekit/errors.h"
#include "src/schemes/scheme_impl.h"

namespace phekit::internal {

namespace {

using ec::CurveParams;
using ec::CurvePoint;

// (r*G, r*Q + m*G) with Q = x*G; decryption solves m*G = c2 - x*c1 by a
// bounded baby-step giant-step search.
class EcElGamalScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kEcElGamal; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    const CurveParams& curve = params.curve.empty()
                                   ? ec::CurveForKeySize(bits)
                                   : ec::GetCurve(params.curve);
    Natural x = rng.Between(1, curve.order - 1);
    CurvePoint q = ec::ScalarMul(x, curve.generator, curve);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = curve.bits();
    keys.params = params;
    keys.params.curve = curve.name;
    keys.public_key = {{"qx", q.x()}, {"qy", q.y()}};
    keys.private_key = NamedValues{{"x", x}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    const Natural bound(static_cast<unsigned long>(keys.params.dlp_bound));
    const Natural& order = Curve(keys).order;
    return bound < order ? bound : order;
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return Curve(keys).order;
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const CurveParams& curve = Curve(keys);
    const Natural r = rng.Between(1, curve.order - 1);
    CurvePoint c1 = ec::ScalarMul(r, curve.generator, curve);
    CurvePoint c2 =
        ec::PointAdd(ec::ScalarMul(r, PublicPoint(keys), curve),
                     ec::ScalarMul(m, curve.generator, curve), curve);
    return PointPair{std::move(c1), std::move(c2)};
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const CurveParams& curve = Curve(keys);
    const PointPair& points = Points(c);
    if (!ec::IsOnCurve(points.first, curve) ||
        !ec::IsOnCurve(points.second, curve)) {
      throw DomainError("ciphertext points are not on curve " + curve.name);
    }
    const CurvePoint shared =
        ec::ScalarMul(keys.Private("x"), points.first, curve);
    const CurvePoint encoded =
        ec::PointAdd(points.second, ec::Negate(shared, curve), curve);
    const std::uint64_t bound = keys.params.dlp_bound;
    auto m = ec::DiscreteLogBounded(curve.generator, encoded, curve, bound);
    if (!m) {
      throw DecryptionBoundError(
          "plaintext exceeds the elliptic-curve discrete logarithm bound " +
          std::to_string(bound) + "; generate keys with a larger --dlp-bound");
    }
    return Natural(static_cast<unsigned long>(*m));
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    const CurveParams& curve = Curve(keys);
    return PointPair{
        ec::PointAdd(Points(lhs).first, Points(rhs).first, curve),
        ec::PointAdd(Points(lhs).second, Points(rhs).second, curve)};
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    const CurveParams& curve = Curve(keys);
    return PointPair{ec::ScalarMul(k, Points(c).first, curve),
                     ec::ScalarMul(k, Points(c).second, curve)};
  }

 private:
  static const CurveParams& Curve(const KeyPair& keys) {
    return ec::GetCurve(keys.params.curve);
  }

  static CurvePoint PublicPoint(const KeyPair& keys) {
    return CurvePoint(keys.Public("qx"), keys.Public("qy"));
  }
};

}  // namespace

std::unique_ptr<Scheme> MakeEcElGamal() {
  return std::make_unique<EcElGamalScheme>();
}

}  // namespace phekit::internal
