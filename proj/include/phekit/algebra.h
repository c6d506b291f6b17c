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

#ifndef PHEKIT_ALGEBRA_H_
#define PHEKIT_ALGEBRA_H_

#include <optional>
#include <string>
#include <string_view>

#include "phekit/algorithm.h"
#include "phekit/capability.h"
#include "phekit/natural.h"
#include "phekit/random.h"
#include "phekit/schemes.h"

namespace phekit {

// Exact non-negative rational used for scalar multiplication, always stored
// in lowest terms. Parsed from "3", "1.05" (= 21/20) or "7/4".
class RationalScalar {
 public:
  RationalScalar(Natural numerator, Natural denominator);
  static RationalScalar Parse(std::string_view text);
  static RationalScalar Integer(Natural value) {
    return RationalScalar(std::move(value), 1);
  }

  const Natural& numerator() const { return numerator_; }
  const Natural& denominator() const { return denominator_; }

  friend bool operator==(const RationalScalar&,
                         const RationalScalar&) = default;

 private:
  Natural numerator_;
  Natural denominator_;
};

// User-facing ciphertext: payload plus the cleartext denominator accumulated
// by rational scalar multiplication, tagged with the fingerprint of the
// public key that produced it.
struct Ciphertext {
  Algorithm algorithm = Algorithm::kRsa;
  Payload payload;
  Natural scale_denominator = 1;
  std::string key_fingerprint;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// SHA-256 of the canonical public-only key document, lowercase hex.
std::string KeyFingerprint(const KeyPair& keys);

Ciphertext EncryptValue(const KeyPair& keys, const Natural& m,
                        RandomSource& rng,
                        std::optional<unsigned> bit_width = std::nullopt);

// Integer decryption; throws InexactResultError when a rational scale does
// not divide the decrypted value.
Natural DecryptValue(const KeyPair& keys, const Ciphertext& c);

// Exact decryption divided by the scale denominator.
mpq_class DecryptScaled(const KeyPair& keys, const Ciphertext& c);

Ciphertext CipherAdd(const Ciphertext& lhs, const Ciphertext& rhs,
                     const KeyPair& keys);
Ciphertext CipherMultiply(const Ciphertext& lhs, const Ciphertext& rhs,
                          const KeyPair& keys);
Ciphertext CipherXor(const Ciphertext& lhs, const Ciphertext& rhs,
                     const KeyPair& keys);
Ciphertext CipherScalar(const RationalScalar& k, const Ciphertext& c,
                        const KeyPair& keys);
Ciphertext CipherRegenerate(const Ciphertext& c, const KeyPair& keys,
                            RandomSource& rng);

inline constexpr int kFormatVersion = 1;

// Canonical JSON documents. Serialization is deterministic (sorted keys, two
// space indent, trailing newline), so parse followed by serialize reproduces
// a canonical document byte for byte.
std::string SerializeKey(const KeyPair& keys);
KeyPair ParseKey(std::string_view text);
std::string SerializeCiphertext(const Ciphertext& c);
Ciphertext ParseCiphertext(std::string_view text);

}  // namespace phekit

#endif  // PHEKIT_ALGEBRA_H_
