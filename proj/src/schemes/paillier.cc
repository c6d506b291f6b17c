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

Natural Power(const Natural& base, unsigned exponent) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// Equal-size primes with gcd(n, phi) = 1.
std::pair<Natural, Natural> PaillierPrimes(unsigned bits, RandomSource& rng) {
  while (true) {
    auto [p, q] = GenerateModulusPrimes(bits, rng);
    if (nt::Gcd(p * q, (p - 1) * (q - 1)) == 1) return {p, q};
  }
}

// g^m mod n^(s+1). For the standard generator g = n + 1 the binomial
// expansion gives 1 + m*n directly when s = 1.
Natural GeneratorPower(const Natural& g, const Natural& m, const Natural& n,
                       const Natural& modulus, unsigned s) {
  if (s == 1 && g == n + 1) return (1 + m * n) % modulus;
  return nt::ModPow(g, m, modulus);
}

class PaillierScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kPaillier; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 16);
    auto [p, q] = PaillierPrimes(bits, rng);
    const Natural n = p * q;
    const Natural n2 = n * n;
    const Natural g = n + 1;
    const Natural lambda = nt::Lcm(p - 1, q - 1);
    const Natural mu =
        nt::ModInverse((nt::ModPow(g, lambda, n2) - 1) / n, n);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"g", g}};
    keys.private_key =
        NamedValues{{"p", p}, {"q", q}, {"lambda", lambda}, {"mu", mu}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    return keys.Public("n");
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return keys.Public("n");
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& n = keys.Public("n");
    const Natural n2 = n * n;
    const Natural r = nt::RandomCoprimeBelow(n, rng);
    return Natural(GeneratorPower(keys.Public("g"), m, n, n2, 1) *
                   nt::ModPow(r, n, n2) % n2);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& n = keys.Public("n");
    const Natural n2 = n * n;
    const Natural u = nt::ModPow(Single(c), keys.Private("lambda"), n2);
    return Natural((u - 1) / n * keys.Private("mu") % n);
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    const Natural& n = keys.Public("n");
    return Natural(Single(lhs) * Single(rhs) % (n * n));
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    const Natural& n = keys.Public("n");
    return nt::ModPow(Single(c), k, n * n);
  }
};

// Generalized Paillier over Z_{n^(s+1)} with plaintext space Z_{n^s}.
class DamgardJurikScheme final : public Scheme {
 public:
  Algorithm algorithm() const override { return Algorithm::kDamgardJurik; }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 16);
    if (params.damgard_jurik_s < 1) {
      throw DomainError("Damgard-Jurik parameter s must be at least 1");
    }
    auto [p, q] = PaillierPrimes(bits, rng);
    const Natural n = p * q;
    const Natural ns = Power(n, params.damgard_jurik_s);
    const Natural lambda = nt::Lcm(p - 1, q - 1);
    // d = 0 (mod lambda), d = 1 (mod n^s).
    const Natural d = lambda * nt::ModInverse(lambda, ns);

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"g", n + 1}};
    keys.private_key =
        NamedValues{{"p", p}, {"q", q}, {"lambda", lambda}, {"d", d}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair& keys) const override {
    return Power(keys.Public("n"), S(keys));
  }

  Natural PlaintextModulus(const KeyPair& keys) const override {
    return Power(keys.Public("n"), S(keys));
  }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const Natural& n = keys.Public("n");
    const unsigned s = S(keys);
    const Natural ns = Power(n, s);
    const Natural modulus = ns * n;
    const Natural r = nt::RandomCoprimeBelow(n, rng);
    return Natural(GeneratorPower(keys.Public("g"), m, n, modulus, s) *
                   nt::ModPow(r, ns, modulus) % modulus);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& n = keys.Public("n");
    const unsigned s = S(keys);
    const Natural modulus = Power(n, s + 1);
    // c^d = (1 + n)^m mod n^(s+1); peel m off one base-n digit at a time.
    const Natural a = nt::ModPow(Single(c), keys.Private("d"), modulus);
    Natural m = 0;
    Natural n_j = 1;
    for (unsigned j = 1; j <= s; ++j) {
      n_j *= n;
      const Natural n_j1 = n_j * n;
      Natural t1 = (a % n_j1 - 1) / n;
      Natural t2 = m;
      Natural factorial = 1;
      Natural n_k = 1;
      for (unsigned k = 2; k <= j; ++k) {
        m -= 1;
        t2 = t2 * m % n_j;
        factorial *= k;
        n_k *= n;
        t1 -= t2 * n_k * nt::ModInverse(factorial, n_j);
        t1 %= n_j;
      }
      if (t1 < 0) t1 += n_j;
      m = t1;
    }
    return m;
  }

  Payload Add(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    const Natural modulus = Power(keys.Public("n"), S(keys) + 1);
    return Natural(Single(lhs) * Single(rhs) % modulus);
  }

  Payload ScalarMultiply(const Payload& c, const Natural& k,
                         const KeyPair& keys) const override {
    const Natural modulus = Power(keys.Public("n"), S(keys) + 1);
    return nt::ModPow(Single(c), k, modulus);
  }

 private:
  static unsigned S(const KeyPair& keys) {
    if (keys.params.damgard_jurik_s < 1) {
      throw DomainError("Damgard-Jurik parameter s must be at least 1");
    }
    return keys.params.damgard_jurik_s;
  }
};

}  // namespace

std::unique_ptr<Scheme> MakePaillier() {
  return std::make_unique<PaillierScheme>();
}

std::unique_ptr<Scheme> MakeDamgardJurik() {
  return std::make_unique<DamgardJurikScheme>();
}

}  // namespace phekit::internal
