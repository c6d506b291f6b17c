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

#include "phekit/random.h"

#include <sodium.h>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "phekit/errors.h"

namespace phekit {

namespace {

void EnsureSodium() {
  static const bool ready = [] { return sodium_init() >= 0; }();
  if (!ready) throw Error("libsodium failed to initialize");
}

}  // namespace

RandomSource::RandomSource() { EnsureSodium(); }

RandomSource::RandomSource(std::uint64_t test_seed) : deterministic_(true) {
  EnsureSodium();
  static constexpr char kDomain[] = "phekit-test-seed";
  unsigned char material[sizeof(kDomain) + 8];
  std::memcpy(material, kDomain, sizeof(kDomain));
  for (int i = 0; i < 8; ++i) {
    material[sizeof(kDomain) + i] =
        static_cast<unsigned char>(test_seed >> (8 * i));
  }
  crypto_hash_sha256(key_.data(), material, sizeof(material));
}

std::optional<std::uint64_t> RandomSource::EnvironmentSeed() {
  const char* raw = std::getenv(kTestSeedVariable);
  if (raw == nullptr) return std::nullopt;
  std::string_view text(raw);
  std::uint64_t seed = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(std::string(kTestSeedVariable) +
                     " must be a non-negative decimal integer");
  }
  return seed;
}

RandomSource RandomSource::FromEnvironment() {
  if (auto seed = EnvironmentSeed()) return RandomSource(*seed);
  return RandomSource();
}

void RandomSource::Fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (!deterministic_) {
    randombytes_buf(out.data(), out.size());
    return;
  }
  unsigned char nonce[crypto_stream_chacha20_ietf_NONCEBYTES] = {};
  for (int i = 0; i < 8; ++i) {
    nonce[i] = static_cast<unsigned char>(counter_ >> (8 * i));
  }
  ++counter_;
  crypto_stream_chacha20_ietf(out.data(), out.size(), nonce, key_.data());
}

Natural RandomSource::Bits(unsigned bits) {
  if (bits == 0) return 0;
  std::vector<std::uint8_t> buffer((bits + 7) / 8);
  Fill(buffer);
  unsigned excess = static_cast<unsigned>(buffer.size() * 8 - bits);
  buffer[0] &= static_cast<std::uint8_t>(0xFFu >> excess);
  Natural out;
  mpz_import(out.get_mpz_t(), buffer.size(), 1, 1, 1, 0, buffer.data());
  return out;
}

Natural RandomSource::Below(const Natural& bound) {
  if (bound <= 0) throw DomainError("random bound must be positive");
  const auto bits = static_cast<unsigned>(BitLength(bound));
  while (true) {
    Natural candidate = Bits(bits);
    if (candidate < bound) return candidate;
  }
}

Natural RandomSource::Between(const Natural& low, const Natural& high) {
  if (high < low) throw DomainError("empty random range");
  return low + Below(Natural(high - low + 1));
}

}  // namespace phekit
