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

#include "phekit/errors.h"
#include "phekit/numtheory.h"
#include "src/schemes/scheme_impl.h"

namespace phekit::internal {

namespace {

// Textbook RSA: c = m^e mod n. Deterministic, multiplicatively homomorphic.
class RsaScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kRsa; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 16);
    auto [p, q] = GenerateModulusPrimes(bits, rng);
    const Natural n = p * q;
    const Natural phi = (p - 1) * (q - 1);
    Natural e;
    do {
      e = rng.Between(3, phi - 1);
    } while (nt::Gcd(e, phi) != 1);
    Natural d = nt::ModInverse(e, phi);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"e", e}};
    keys.private_key = NamedValues{{"p", p}, {"q", q}, {"d", d}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    return keys.Public("n");
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return keys.Public("n");
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource&) const override {
    return nt::ModPow(m, keys.Public("e"), keys.Public("n"));
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    return nt::ModPow(Single(c), keys.Private("d"), keys.Public("n"));
  }

  Payload Multiply(const Payload& lhs, const Payload& rhs,
                   const KeyPair& keys) const override {
    return Natural(Single(lhs) * Single(rhs) % keys.Public("n"));
  }
};

}  // namespace

std::unique_ptr<Scheme> MakeRsa() { return std::make_unique<RsaScheme>(); }

}  // namespace phekit::internal
