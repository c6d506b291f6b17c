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

#ifndef PHEKIT_ALGORITHM_H_
#define PHEKIT_ALGORITHM_H_

#include <array>
#include <string_view>

namespace phekit {

// The ten supported cryptosystems, in chronological (capability table) order.
enum class Algorithm {
  kRsa,
  kGoldwasserMicali,
  kElGamal,
  kExpElGamal,
  kBenaloh,
  kEcElGamal,
  kNaccacheStern,
  kOkamotoUchiyama,
  kPaillier,
  kDamgardJurik,
};

inline constexpr std::array<Algorithm, 10> kAllAlgorithms = {
    Algorithm::kRsa,           Algorithm::kGoldwasserMicali,
    Algorithm::kElGamal,       Algorithm::kExpElGamal,
    Algorithm::kBenaloh,       Algorithm::kEcElGamal,
    Algorithm::kNaccacheStern, Algorithm::kOkamotoUchiyama,
    Algorithm::kPaillier,      Algorithm::kDamgardJurik,
};

// Machine identifier used in files and on the command line, e.g. "exp-elgamal".
std::string_view AlgorithmId(Algorithm algorithm);

// Human-readable name used in error messages, e.g. "Exponential-ElGamal".
std::string_view DisplayName(Algorithm algorithm);

// Accepts either form, case-insensitively. Throws LookupError.
Algorithm ParseAlgorithm(std::string_view text);

}  // namespace phekit

#endif  // PHEKIT_ALGORITHM_H_
