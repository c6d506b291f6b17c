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

#ifndef PHEKIT_SRC_SCHEMES_SCHEME_IMPL_H_
#define PHEKIT_SRC_SCHEMES_SCHEME_IMPL_H_

#include <memory>
#include <utility>
#include <vector>

#include "phekit/schemes.h"

namespace phekit::internal {

std::unique_ptr<Scheme> MakeRsa();
std::unique_ptr<Scheme> MakeGoldwasserMicali();
std::unique_ptr<Scheme> MakeElGamal();
std::unique_ptr<Scheme> MakeExpElGamal();
std::unique_ptr<Scheme> MakeBenaloh();
std::unique_ptr<Scheme> MakeEcElGamal();
std::unique_ptr<Scheme> MakeNaccacheStern();
std::unique_ptr<Scheme> MakeOkamotoUchiyama();
std::unique_ptr<Scheme> MakePaillier();
std::unique_ptr<Scheme> MakeDamgardJurik();

BitCiphertexts GoldwasserMicaliEncryptBits(const KeyPair& keys,
                                           const Natural& m, unsigned width,
                                           RandomSource& rng);

// Counts prime candidates that reach Miller-Rabin during key generation.
class RetryBudget {
 public:
  RetryBudget(Algorithm algorithm, unsigned security_bits, unsigned limit)
      : algorithm_(algorithm), security_bits_(security_bits), limit_(limit) {}

  // Throws KeygenExhaustedError once the limit is exceeded.
  void Spend();

 private:
  Algorithm algorithm_;
  unsigned security_bits_;
  unsigned limit_;
  unsigned used_ = 0;
};

// Distinct primes p, q of bits/2 and bits - bits/2 bits; p*q has exactly
// 'bits' bits.
std::pair<Natural, Natural> GenerateModulusPrimes(unsigned bits,
                                                  RandomSource& rng);

// Random k in [low, high] such that multiplier*k + 1 has exactly 'bits' bits
// with the top two bits set. Returns the inclusive range for k.
std::pair<Natural, Natural> CofactorRange(const Natural& multiplier,
                                          unsigned bits);

const Natural& Single(const Payload& payload);
const NaturalPair& Pair(const Payload& payload);
const BitCiphertexts& Bits(const Payload& payload);
const PointPair& Points(const Payload& payload);

// Distinct prime factors by trial division; 'value' must fit in 64 bits.
std::vector<Natural> SmallPrimeFactors(std::uint64_t value);

// First 'count' odd primes: 3, 5, 7, ...
std::vector<Natural> FirstOddPrimes(unsigned count);

void RequireMinimumBits(Algorithm algorithm, unsigned bits, unsigned minimum);

}  // namespace phekit::internal

#endif  // PHEKIT_SRC_SCHEMES_SCHEME_IMPL_H_
