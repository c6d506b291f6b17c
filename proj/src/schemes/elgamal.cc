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
#include "phekit/numtheory.h"
#include "src/schemes/scheme_impl.h"

namespace phekit::internal {

namespace {

// Bits of the prime subgroup order q. NIST sizes follow the ECC column of the
// key-size table; smaller (test) moduli get a proportionally smaller q.
unsigned SubgroupBits(unsigned bits) {
  if (bits >= 7680) return 384;
  if (bits >= 3072) return 256;
  if (bits >= 2048) return 224;
  if (bits >= 1024) return 160;
  return std::min(160u, std::max(bits - 16, bits / 2));
}

// ElGamal over a Schnorr group: p = 2kq + 1, g of prime order q, h = g^x.
// The exponential variant encrypts g^m instead of m and recovers m with a
// bounded discrete logarithm.
class ElGamalScheme final : public Scheme {
 public:
  explicit ElGamalScheme(bool exponential) : exponential_(exponential) {}

  Algorithm algorithm() const override {
    return exponential_ ? Algorithm::kExpElGamal : Algorithm::kElGamal;
  }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 24);
    const unsigned q_bits = SubgroupBits(bits);
    Natural p;
    Natural q;
    bool found = false;
    while (!found) {
      q = nt::GeneratePrime(q_bits, rng);
      const Natural twice_q = 2 * q;
      auto [low, high] = CofactorRange(twice_q, bits);
      if (high < low) continue;
      for (unsigned attempt = 0; attempt < 64 * bits && !found; ++attempt) {
        p = twice_q * rng.Between(low, high) + 1;
        if (nt::HasSmallFactor(p)) continue;
        found = nt::IsProbablePrime(p, nt::kMillerRabinRounds, rng);
      }
    }
    const Natural cofactor = (p - 1) / q;
    Natural g;
    do {
      g = nt::ModPow(rng.Between(2, p - 2), cofactor, p);
    } while (g == 1);
    Natural x = rng.Between(1, q - 1);
    Natural h = nt::ModPow(g, x, p);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"p", p}, {"q", q}, {"g", g}, {"h", h}};
    keys.private_key = NamedValues{{"x", x}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    if (!exponential_) return keys.Public("p");
    const Natural bound(static_cast<unsigned long>(keys.params.dlp_bound));
    const Natural& q = keys.Public("q");
    return bound < q ? bound : q;
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return exponential_ ? keys.Public("q") : keys.Public("p");
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& p = keys.Public("p");
    const Natural& g = keys.Public("g");
    const Natural r = rng.Between(1, keys.Public("q") - 1);
    const Natural encoded = exponential_ ? nt::ModPow(g, m, p) : Natural(m % p);
    return NaturalPair{nt::ModPow(g, r, p),
                       encoded * nt::ModPow(keys.Public("h"), r, p) % p};
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& p = keys.Public("p");
    const NaturalPair& pair = Pair(c);
    const Natural shared = nt::ModPow(pair.first, keys.Private("x"), p);
    const Natural encoded = pair.second * nt::ModInverse(shared, p) % p;
    if (!exponential_) return encoded;
    const std::uint64_t bound = keys.params.dlp_bound;
    auto m = nt::DiscreteLogBounded(keys.Public("g"), encoded, p, bound);
    if (!m) {
      throw DecryptionBoundError(
          "plaintext exceeds the discrete logarithm bound " +
          std::to_string(bound) + "; generate keys with a larger --dlp-bound");
    }
    return Natural(static_cast<unsigned long>(*m));
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    if (!exponential_) return Scheme::Add(lhs, rhs, keys);
    return Combine(lhs, rhs, keys);
  }

  Payload Multiply(const Payload& lhs, const Payload& rhs,
                   const KeyPair& keys) const override {
    if (exponential_) return Scheme::Multiply(lhs, rhs, keys);
    return Combine(lhs, rhs, keys);
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    if (!exponential_) return Scheme::ScalarMultiply(c, k, keys);
    const Natural& p = keys.Public("p");
    return NaturalPair{nt::ModPow(Pair(c).first, k, p),
                       nt::ModPow(Pair(c).second, k, p)};
  }

 private:
  static Payload Combine(const Payload& lhs, const Payload& rhs,
                         const KeyPair& keys) {
    const Natural& p = keys.Public("p");
    return NaturalPair{Pair(lhs).first * Pair(rhs).first % p,
                       Pair(lhs).second * Pair(rhs).second % p};
  }

  bool exponential_;
};

}  // namespace

std::unique_ptr<Scheme> MakeElGamal() {
  return std::make_unique<ElGamalScheme>(false);
}

std::unique_ptr<Scheme> MakeExpElGamal() {
  return std::make_unique<ElGamalScheme>(true);
}

}  // namespace phekit::internal
