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

#include <algorithm>
#include <string>

#include "phekit/errors.h"
#include "phekit/numtheory.h"
#include "src/schemes/scheme_impl.h"

namespace phekit::internal {

namespace {

// sigma = u * v is a product of small odd primes; p = 2au + 1 and
// q = 2bv + 1 with auxiliary primes a, b. c = g^m r^sigma mod n. Decryption
// recovers m mod each prime factor of sigma and recombines with the CRT.
class NaccacheSternScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kNaccacheStern; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    if (params.naccache_prime_count < 1) {
      throw DomainError("Naccache-Stern needs at least one small prime");
    }
    const std::vector<Natural> primes =
        FirstOddPrimes(params.naccache_prime_count);

    // Balance u and v: largest primes first, each to the smaller side.
    Natural u = 1, v = 1;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
      (u <= v ? u : v) *= *it;
    }
    const Natural sigma = u * v;

    const unsigned p_bits = bits / 2;
    const unsigned q_bits = bits - p_bits;
    RetryBudget budget(algorithm(), bits, params.keygen_retry_budget);
    const Natural p = StructuredPrime(u, p_bits, sigma, 0, rng, budget);
    const Natural a = (p - 1) / (2 * u);
    Natural q;
    do {
      q = StructuredPrime(v, q_bits, sigma, a, rng, budget);
    } while (q == p);

    const Natural n = p * q;
    const Natural phi = (p - 1) * (q - 1);
    Natural g;
    while (true) {
      budget.Spend();
      g = nt::RandomCoprimeBelow(n, rng);
      bool full_order = true;
      for (const Natural& prime : primes) {
        if (nt::ModPow(g, phi / prime, n) == 1) {
          full_order = false;
          break;
        }
      }
      if (full_order) break;
    }

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"g", g}, {"sigma", sigma}};
    keys.private_key = NamedValues{{"p", p}, {"q", q}, {"phi", phi}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    return keys.Public("sigma");
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return keys.Public("sigma");
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& n = keys.Public("n");
    const Natural r = nt::RandomCoprimeBelow(n, rng);
    return Natural(nt::ModPow(keys.Public("g"), m, n) *
                   nt::ModPow(r, keys.Public("sigma"), n) % n);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& n = keys.Public("n");
    const Natural& phi = keys.Private("phi");
    const std::vector<Natural> primes =
        FirstOddPrimes(keys.params.naccache_prime_count);
    Natural product = 1;
    for (const Natural& prime : primes) product *= prime;
    if (product != keys.Public("sigma")) {
      throw DomainError("Naccache-Stern sigma does not match prime_count");
    }

    std::vector<Natural> residues;
    residues.reserve(primes.size());
    for (const Natural& prime : primes) {
      const Natural exponent = phi / prime;
      const Natural target = nt::ModPow(Single(c), exponent, n);
      const Natural base = nt::ModPow(keys.Public("g"), exponent, n);
      auto digit =
          nt::DiscreteLogBounded(base, target, n, prime.get_ui() - 1);
      if (!digit) {
        throw DomainError("ciphertext is not a valid Naccache-Stern "
                          "encryption");
      }
      residues.emplace_back(static_cast<unsigned long>(*digit));
    }
    return nt::Crt(residues, primes);
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
  // Prime 2*a*factor + 1 of 'bits' bits, a prime coprime to sigma and
  // different from 'exclude'.
  static Natural StructuredPrime(const Natural& factor, unsigned bits,
                                 const Natural& sigma, const Natural& exclude,
                                 RandomSource& rng, RetryBudget& budget) {
    const Natural twice = 2 * factor;
    auto [low, high] = CofactorRange(twice, bits);
    if (low < 64 || high < low) {
      throw DomainError("Naccache-Stern key size " + std::to_string(bits * 2) +
                        " is too small for the message space");
    }
    while (true) {
      Natural a = rng.Between(low, high) | 1;
      if (a > high || a == exclude) continue;
      if (nt::HasSmallFactor(a) || nt::Gcd(a, sigma) != 1) continue;
      Natural p = twice * a + 1;
      if (nt::HasSmallFactor(p)) continue;
      budget.Spend();
      if (nt::IsProbablePrime(a, nt::kMillerRabinRounds, rng) &&
          nt::IsProbablePrime(p, nt::kMillerRabinRounds, rng)) {
        return p;
      }
    }
  }
};

}  // namespace

std::unique_ptr<Scheme> MakeNaccacheStern() {
  return std::make_unique<NaccacheSternScheme>();
}

}  // namespace phekit::internal
