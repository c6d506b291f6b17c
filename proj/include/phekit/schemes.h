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

#ifndef PHEKIT_SCHEMES_H_
#define PHEKIT_SCHEMES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phekit/algorithm.h"
#include "phekit/ec.h"
#include "phekit/natural.h"
#include "phekit/random.h"

namespace phekit {

inline constexpr std::uint64_t kDefaultDlpBound = std::uint64_t{1} << 20;
// Smallest prime above 2^20, so every 20-bit plaintext fits one block.
inline constexpr std::uint64_t kDefaultBenalohBlockSize = 1048583;
inline constexpr unsigned kDefaultDamgardJurikS = 2;
inline constexpr unsigned kDefaultNaccachePrimeCount = 8;
inline constexpr unsigned kDefaultKeygenRetryBudget = 50000;

// Algorithm-specific tunables. Only the fields relevant to an algorithm are
// kept in a KeyPair; the rest hold their defaults.
struct SchemeParams {
  unsigned damgard_jurik_s = kDefaultDamgardJurikS;
  std::uint64_t benaloh_block_size = kDefaultBenalohBlockSize;
  unsigned naccache_prime_count = kDefaultNaccachePrimeCount;
  std::string curve;  // EC ElGamal; empty selects the curve by key size
  std::uint64_t dlp_bound = kDefaultDlpBound;
  // Candidates allowed to reach Miller-Rabin in Benaloh and Naccache-Stern
  // key generation. Not persisted.
  unsigned keygen_retry_budget = kDefaultKeygenRetryBudget;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

// Drops the fields 'algorithm' does not use.
SchemeParams NormalizeParams(Algorithm algorithm, const SchemeParams& params);

using NamedValues = std::map<std::string, Natural, std::less<>>;

struct KeyPair {
  Algorithm algorithm = Algorithm::kRsa;
  unsigned security_bits = 0;
  SchemeParams params;
  NamedValues public_key;
  std::optional<NamedValues> private_key;

  bool has_private() const { return private_key.has_value(); }
  KeyPair PublicOnly() const;

  // Named component lookup; throws DomainError when absent.
  const Natural& Public(std::string_view name) const;
  const Natural& Private(std::string_view name) const;

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

struct NaturalPair {
  Natural first;
  Natural second;

  friend bool operator==(const NaturalPair&, const NaturalPair&) = default;
};

struct PointPair {
  ec::CurvePoint first;
  ec::CurvePoint second;

  friend bool operator==(const PointPair&, const PointPair&) = default;
};

using BitCiphertexts = std::vector<Natural>;

// Ciphertext body: one residue, a residue pair, one residue per plaintext bit,
// or a pair of curve points.
using Payload = std::variant<Natural, NaturalPair, BitCiphertexts, PointPair>;

enum class PayloadKind { kSingle, kPair, kBits, kPointPair };

PayloadKind KindOf(const Payload& payload);
PayloadKind ExpectedPayloadKind(Algorithm algorithm);
std::string_view PayloadKindName(PayloadKind kind);

// Uniform interface every cryptosystem implements. Homomorphic operations
// default to raising CapabilityError; each scheme overrides the ones it
// supports. Callers normally go through the free functions below, which
// validate capability, payload variant, and plaintext range first.
class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual Algorithm algorithm() const = 0;

  virtual KeyPair GenerateKeys(unsigned security_bits,
                               const SchemeParams& params,
                               RandomSource& rng) const = 0;

  // Exclusive upper bound on plaintexts; nullopt when any width is accepted.
  virtual std::optional<Natural> PlaintextBound(const KeyPair& keys) const = 0;

  // Modulus homomorphic results wrap around. Okamoto-Uchiyama needs the
  // private key for this.
  virtual Natural PlaintextModulus(const KeyPair& keys) const = 0;

  virtual Payload Encrypt(const KeyPair& keys, const Natural& m,
                          RandomSource& rng) const = 0;
  virtual Natural Decrypt(const KeyPair& keys, const Payload& c) const = 0;

  virtual Payload Add(const Payload& lhs, const Payload& rhs,
                      const KeyPair& keys) const;
  virtual Payload Multiply(const Payload& lhs, const Payload& rhs,
                           const KeyPair& keys) const;
  virtual Payload Xor(const Payload& lhs, const Payload& rhs,
                      const KeyPair& keys) const;
  virtual Payload ScalarMultiply(const Payload& c, const Natural& k,
                                 const KeyPair& keys) const;

  // Add(c, Encrypt(0)) for schemes that support regeneration.
  Payload Regenerate(const Payload& c, const KeyPair& keys,
                     RandomSource& rng) const;
};

const Scheme& SchemeFor(Algorithm algorithm);

KeyPair GenerateKeys(Algorithm algorithm, unsigned security_bits,
                     const SchemeParams& params, RandomSource& rng);

std::optional<Natural> PlaintextBound(const KeyPair& keys);
Natural PlaintextModulus(const KeyPair& keys);

// Throws PlaintextRangeError when m is at or above the plaintext bound.
Payload Encrypt(const KeyPair& keys, const Natural& m, RandomSource& rng);

// Goldwasser-Micali only: encrypts m as exactly 'bit_width' big-endian bits.
Payload EncryptPadded(const KeyPair& keys, const Natural& m,
                      unsigned bit_width, RandomSource& rng);

Natural Decrypt(const KeyPair& keys, const Payload& c);

Payload RawAdd(const Payload& lhs, const Payload& rhs, const KeyPair& keys);
Payload RawMultiply(const Payload& lhs, const Payload& rhs,
                    const KeyPair& keys);
Payload RawXor(const Payload& lhs, const Payload& rhs, const KeyPair& keys);
Payload RawScalar(const Payload& c, const Natural& k, const KeyPair& keys);
Payload Regenerate(const Payload& c, const KeyPair& keys, RandomSource& rng);

}  // namespace phekit

#endif  // PHEKIT_SCHEMES_H_
