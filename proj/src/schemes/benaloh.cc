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

// Benaloh with block size r: c = y^m u^r mod n, r | p - 1,
// gcd(r, (p - 1) / r) = 1 and gcd(r, q - 1) = 1.
class BenalohScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kBenaloh; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    const std::uint64_t block = params.benaloh_block_size;
    if (block < 2) throw DomainError("Benaloh block size must be at least 2");
    const Natural r(static_cast<unsigned long>(block));
    const unsigned p_bits = bits / 2;
    const unsigned q_bits = bits - p_bits;
    if (p_bits < BitLength(r) + 8) {
      throw DomainError("Benaloh needs at least " +
                        std::to_string(2 * (BitLength(r) + 8)) +
                        "-bit keys for block size " + std::to_string(block));
    }
    RetryBudget budget(algorithm(), bits, params.keygen_retry_budget);

    // p = r*k + 1 with gcd(k, r) = 1; r*k must be even for p to be odd.
    auto [low, high] = CofactorRange(r, p_bits);
    const bool r_odd = block % 2 == 1;
    Natural p;
    while (true) {
      Natural k = rng.Between(low, high);
      if (r_odd && mpz_odd_p(k.get_mpz_t())) k += (k < high) ? 1 : -1;
      if (nt::Gcd(k, r) != 1) continue;
      p = r * k + 1;
      if (nt::HasSmallFactor(p)) continue;
      budget.Spend();
      if (nt::IsProbablePrime(p, nt::kMillerRabinRounds, rng)) break;
    }

    Natural top;
    mpz_setbit(top.get_mpz_t(), q_bits - 1);
    mpz_setbit(top.get_mpz_t(), q_bits - 2);
    Natural q;
    while (true) {
      q = rng.Bits(q_bits) | top | 1;
      if (q == p || nt::Gcd(r, q - 1) != 1 || nt::HasSmallFactor(q)) continue;
      budget.Spend();
      if (nt::IsProbablePrime(q, nt::kMillerRabinRounds, rng)) break;
    }

    const Natural n = p * q;
    const Natural phi = (p - 1) * (q - 1);
    const std::vector<Natural> factors = SmallPrimeFactors(block);
    Natural y;
    while (true) {
      budget.Spend();
      y = nt::RandomCoprimeBelow(n, rng);
      bool full_order = true;
      for (const Natural& f : factors) {
        if (nt::ModPow(y, phi / f, n) == 1) {
          full_order = false;
          break;
        }
      }
      if (full_order) break;
    }
    Natural x = nt::ModPow(y, phi / r, n);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"y", y}};
    keys.private_key =
        NamedValues{{"p", p}, {"q", q}, {"phi", phi}, {"x", x}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    return Block(keys);
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return Block(keys);
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& n = keys.Public("n");
    const Natural u = nt::RandomCoprimeBelow(n, rng);
    return Natural(nt::ModPow(keys.Public("y"), m, n) *
                   nt::ModPow(u, Block(keys), n) % n);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& n = keys.Public("n");
    const Natural r = Block(keys);
    const Natural a = nt::ModPow(Single(c), keys.Private("phi") / r, n);
    auto m = nt::DiscreteLogBounded(keys.Private("x"), a, n,
                                    keys.params.benaloh_block_size - 1);
    if (!m) throw DomainError("ciphertext is not a valid Benaloh encryption");
    return Natural(static_cast<unsigned long>(*m));
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    return Natural(Single(lhs) * Single(rhs) % keys.Public("n"));
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    return nt::ModPow(Single(c), k, keys.Public("n"));
  }

 private:
  static Natural Block(const KeyPair& keys) {
    return Natural(static_cast<unsigned long>(keys.params.benaloh_block_size));
  }
};

}  // namespace

std::unique_ptr<Scheme> MakeBenaloh() {
  return std::make_unique<BenalohScheme>();
}

}  // namespace phekit::internal
