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

// n = p^2 q; c = g^m h^r mod n with h = g^n. Decryption works in Z_{p^2}
// through L_p(u) = (u - 1) / p.
class OkamotoUchiyamaScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kOkamotoUchiyama; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 24);
    const unsigned p_bits = bits / 3;
    const unsigned q_bits = bits - 2 * p_bits;
    Natural p, q, n;
    do {
      p = nt::GeneratePrime(p_bits, rng);
      do {
        q = nt::GeneratePrime(q_bits, rng);
      } while (q == p);
      n = p * p * q;
    } while (BitLength(n) != bits);

    const Natural p2 = p * p;
    Natural g;
    while (true) {
      g = rng.Between(2, n - 1);
      if (nt::Gcd(g, n) != 1) continue;
      if (nt::ModPow(g, p - 1, p2) != 1) break;
    }
    Natural h = nt::ModPow(g, n, n);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"g", g}, {"h", h}};
    keys.private_key = NamedValues{{"p", p}, {"q", q}};
    return keys;
  }

  // p is secret, so the public bound is 2^(|p| - 1) with |p| = |n| / 3.
  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    const auto p_bits = BitLength(keys.Public("n")) / 3;
    if (p_bits < 2) throw DomainError("Okamoto-Uchiyama modulus is too small");
    Natural bound;
    mpz_setbit(bound.get_mpz_t(), p_bits - 1);
    return bound;
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return keys.Private("p");
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& n = keys.Public("n");
    const Natural r = rng.Between(1, n - 1);
    return Natural(nt::ModPow(keys.Public("g"), m, n) *
                   nt::ModPow(keys.Public("h"), r, n) % n);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& p = keys.Private("p");
    const Natural p2 = p * p;
    const Natural a = (nt::ModPow(Single(c), p - 1, p2) - 1) / p;
    const Natural b = (nt::ModPow(keys.Public("g"), p - 1, p2) - 1) / p;
    return Natural(a * nt::ModInverse(b, p) % p);
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    return Natural(Single(lhs) * Single(rhs) % keys.Public("n"));
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    return nt::ModPow(Single(c), k, keys.Public("n"));
  }
};

}  // namespace

std::unique_ptr<Scheme> MakeOkamotoUchiyama() {
  return std::make_unique<OkamotoUchiyamaScheme>();
}

}  // namespace phekit::internal
