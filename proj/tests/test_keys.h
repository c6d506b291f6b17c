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

#ifndef PHEKIT_TESTS_TEST_KEYS_H_
#define PHEKIT_TESTS_TEST_KEYS_H_

#include "phekit/schemes.h"

namespace phekit::testing {

// Small key sizes that still hold 18-bit plaintexts in every scheme.
struct ToySetup {
  unsigned bits;
  SchemeParams params;
};

inline ToySetup Toy(Algorithm algorithm) {
  ToySetup setup{64, SchemeParams{}};
  switch (algorithm) {
    case Algorithm::kEcElGamal:
      setup.bits = 160;
      setup.params.curve = "secp160r1";
      break;
    case Algorithm::kOkamotoUchiyama:
      setup.bits = 96;
      break;
    default:
      break;
  }
  return setup;
}

inline KeyPair ToyKeys(Algorithm algorithm, RandomSource& rng) {
  const ToySetup setup = Toy(algorithm);
  return GenerateKeys(algorithm, setup.bits, setup.params, rng);
}

// Hand-checkable keys from the textbook examples.
inline KeyPair FixtureRsa() {
  KeyPair k;
  k.algorithm = Algorithm::kRsa;
  k.security_bits = 12;
  k.public_key = {{"n", 3233}, {"e", 17}};
  k.private_key = NamedValues{{"p", 61}, {"q", 53}, {"d", 413}};
  return k;
}

inline KeyPair FixtureElGamal() {
  KeyPair k;
  k.algorithm = Algorithm::kElGamal;
  k.security_bits = 5;
  k.public_key = {{"p", 23}, {"q", 11}, {"g", 5}, {"h", 8}};
  k.private_key = NamedValues{{"x", 6}};
  return k;
}

inline KeyPair FixturePaillier() {
  KeyPair k;
  k.algorithm = Algorithm::kPaillier;
  k.security_bits = 4;
  k.public_key = {{"n", 15}, {"g", 16}};
  k.private_key =
      NamedValues{{"p", 3}, {"q", 5}, {"lambda", 4}, {"mu", 4}};
  return k;
}

inline KeyPair FixtureGoldwasserMicali() {
  KeyPair k;
  k.algorithm = Algorithm::kGoldwasserMicali;
  k.security_bits = 7;
  k.public_key = {{"n", 77}, {"x", 6}};
  k.private_key = NamedValues{{"p", 7}, {"q", 11}};
  return k;
}

}  // namespace phekit::testing

#endif  // PHEKIT_TESTS_TEST_KEYS_H_
