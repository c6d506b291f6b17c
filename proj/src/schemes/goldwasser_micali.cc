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

// Encrypts each plaintext bit b as r^2 * x^b mod n, where x is a quadratic
// non-residue modulo both prime factors (Jacobi symbol +1).
class GoldwasserMicaliScheme final : public Scheme {
 public:
  Algorithm algorithm() const override {
    return Algorithm::kGoldwasserMicali;
  }

  KeyPair GenerateKeys(unsigned bits, const SchemeParams& params,
                       RandomSource& rng) const override {
    RequireMinimumBits(algorithm(), bits, 16);
    auto [p, q] = GenerateModulusPrimes(bits, rng);
    const Natural n = p * q;
    Natural x;
    do {
      x = rng.Between(2, n - 1);
    } while (nt::Gcd(x, n) != 1 || nt::IsQuadraticResidueModPrime(x, p) ||
             nt::IsQuadraticResidueModPrime(x, q));

    KeyPair keys;
    keys.algorithm = algorithm();
    keys.security_bits = bits;
    keys.params = params;
    keys.public_key = {{"n", n}, {"x", x}};
    keys.private_key = NamedValues{{"p", p}, {"q", q}};
    return keys;
  }

  std::optional<Natural> PlaintextBound(const KeyPair&) const override {
    return std::nullopt;
  }

  Natural PlaintextModulus(const KeyPair&) const override { return 2; }

  Payload Encrypt(const KeyPair& keys, const Natural& m,
                  RandomSource& rng) const override {
    const auto width = std::max<std::size_t>(1, BitLength(m));
    return GoldwasserMicaliEncryptBits(keys, m, static_cast<unsigned>(width),
                                       rng);
  }

  Natural Decrypt(const KeyPair& keys, const Payload& c) const override {
    const Natural& p = keys.Private("p");
    Natural m = 0;
    for (const Natural& residue : Bits(c)) {
      m <<= 1;
      if (!nt::IsQuadraticResidueModPrime(residue, p)) m += 1;
    }
    return m;
  }

  Payload Xor(const Payload& lhs, const Payload& rhs,
              const KeyPair& keys) const override {
    const BitCiphertexts& a = Bits(lhs);
    const BitCiphertexts& b = Bits(rhs);
    if (a.size() != b.size()) {
      throw BitLengthError("xor operands must have equal bit lengths, got " +
                           std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
    }
    const Natural& n = keys.Public("n");
    BitCiphertexts out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i] % n);
    return out;
  }
};

}  // namespace

BitCiphertexts GoldwasserMicaliEncryptBits(const KeyPair& keys,
                                           const Natural& m, unsigned width,
                                           RandomSource& rng) {
  if (width == 0 || BitLength(m) > width) {
    throw PlaintextRangeError("plaintext " + ToDecimal(m) +
                              " does not fit in " + std::to_string(width) +
                              " bits");
  }
  const Natural& n = keys.Public("n");
  const Natural& x = keys.Public("x");
  BitCiphertexts out;
  out.reserve(width);
  for (unsigned i = width; i-- > 0;) {
    const Natural r = nt::RandomCoprimeBelow(n, rng);
    Natural c = r * r % n;
    if (mpz_tstbit(m.get_mpz_t(), i)) c = c * x % n;
    out.push_back(std::move(c));
  }
  return out;
}

std::unique_ptr<Scheme> MakeGoldwasserMicali() {
  return std::make_unique<GoldwasserMicaliScheme>();
}

}  // namespace phekit::internal
