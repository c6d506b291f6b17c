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

#ifndef PHEKIT_RANDOM_H_
#define PHEKIT_RANDOM_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "phekit/natural.h"

namespace phekit {

// Environment variable holding a decimal test seed. When present, every
// RandomSource created through FromEnvironment() is deterministic.
inline constexpr char kTestSeedVariable[] = "PHE_TEST_SEED";

// Source of the random keys consumed by key generation and encryption.
//
// Default-constructed instances draw from the operating system CSPRNG. A
// seeded instance expands the seed into a ChaCha20 keystream, so the whole
// sequence of draws is reproducible; it exists for tests only and must never
// produce real key material. Instances are not thread-safe.
class RandomSource {
 public:
  RandomSource();
  explicit RandomSource(std::uint64_t test_seed);

  // Seeded from PHE_TEST_SEED when set and parseable, otherwise OS entropy.
  // Throws ParseError when the variable holds something other than a decimal.
  static RandomSource FromEnvironment();
  static std::optional<std::uint64_t> EnvironmentSeed();

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) noexcept = default;
  RandomSource& operator=(RandomSource&&) noexcept = default;

  bool deterministic() const { return deterministic_; }

  void Fill(std::span<std::uint8_t> out);

  // Uniform in [0, 2^bits).
  Natural Bits(unsigned bits);
  // Uniform in [0, bound). bound must be positive.
  Natural Below(const Natural& bound);
  // Uniform in [low, high], inclusive.
  Natural Between(const Natural& low, const Natural& high);

 private:
  bool deterministic_ = false;
  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
};

}  // namespace phekit

#endif  // PHEKIT_RANDOM_H_
