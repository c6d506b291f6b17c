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

#include "phekit/algebra.h"

#include <string>

#include "phekit/errors.h"
#include "phekit/numtheory.h"

namespace phekit {

namespace {

void CheckKey(const Ciphertext& c, const KeyPair& keys,
              const std::string& fingerprint) {
  if (c.algorithm != keys.algorithm) {
    throw OperandMismatchError(
        "ciphertext was produced by " + std::string(AlgorithmId(c.algorithm)) +
        " but the key is " + std::string(AlgorithmId(keys.algorithm)));
  }
  if (c.key_fingerprint != fingerprint) {
    throw OperandMismatchError(
        "ciphertext was produced under a different key (fingerprint " +
        c.key_fingerprint + ", expected " + fingerprint + ")");
  }
}

// Shared preamble of the binary operators: capability first, then operand
// compatibility, all before any arithmetic.
std::string CheckBinary(HomomorphicOp op, const Ciphertext& lhs,
                        const Ciphertext& rhs, const KeyPair& keys) {
  RequireCapability(keys.algorithm, op);
  std::string fingerprint = KeyFingerprint(keys);
  CheckKey(lhs, keys, fingerprint);
  CheckKey(rhs, keys, fingerprint);
  if (lhs.scale_denominator != rhs.scale_denominator) {
    throw OperandMismatchError(
        "operands carry different scale denominators (" +
        ToDecimal(lhs.scale_denominator) + " vs " +
        ToDecimal(rhs.scale_denominator) + ")");
  }
  return fingerprint;
}

Ciphertext Derived(const Ciphertext& from, Payload payload) {
  Ciphertext out;
  out.algorithm = from.algorithm;
  out.payload = std::move(payload);
  out.scale_denominator = from.scale_denominator;
  out.key_fingerprint = from.key_fingerprint;
  return out;
}

}  // namespace

RationalScalar::RationalScalar(Natural numerator, Natural denominator) {
  if (numerator < 0 || denominator <= 0) {
    throw DomainError("scalars must be non-negative with a positive "
                      "denominator");
  }
  const Natural g = numerator == 0 ? denominator : nt::Gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

RationalScalar RationalScalar::Parse(std::string_view text) {
  auto malformed = [&] {
    return ParseError("malformed scalar '" + std::string(text) +
                      "'; expected a non-negative decimal such as 3, 1.05 or "
                      "7/4");
  };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    try {
      Natural num = ParseDecimal(text.substr(0, slash), "scalar");
      Natural den = ParseDecimal(text.substr(slash + 1), "scalar");
      if (den == 0) throw malformed();
      return RationalScalar(std::move(num), std::move(den));
    } catch (const ParseError&) {
      throw malformed();
    }
  }
  const auto dot = text.find('.');
  try {
    if (dot == std::string_view::npos) {
      return Integer(ParseDecimal(text, "scalar"));
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view fraction = text.substr(dot + 1);
    if (fraction.empty()) throw malformed();
    Natural scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
    Natural value = ParseDecimal(fraction, "scalar");
    if (!whole.empty()) value += ParseDecimal(whole, "scalar") * scale;
    return RationalScalar(std::move(value), std::move(scale));
  } catch (const ParseError&) {
    throw malformed();
  }
}

Ciphertext EncryptValue(const KeyPair& keys, const Natural& m,
                        RandomSource& rng, std::optional<unsigned> bit_width) {
  Ciphertext c;
  c.algorithm = keys.algorithm;
  c.payload = bit_width ? EncryptPadded(keys, m, *bit_width, rng)
                        : Encrypt(keys, m, rng);
  c.key_fingerprint = KeyFingerprint(keys);
  return c;
}

mpq_class DecryptScaled(const KeyPair& keys, const Ciphertext& c) {
  CheckKey(c, keys, KeyFingerprint(keys));
  if (c.scale_denominator <= 0) {
    throw DomainError("scale denominator must be positive");
  }
  mpq_class out(Decrypt(keys, c.payload), c.scale_denominator);
  out.canonicalize();
  return out;
}

Natural DecryptValue(const KeyPair& keys, const Ciphertext& c) {
  const mpq_class value = DecryptScaled(keys, c);
  if (value.get_den() != 1) {
    throw InexactResultError("decrypted value " + value.get_str() +
                             " is not an integer; use rational mode");
  }
  return value.get_num();
}

Ciphertext CipherAdd(const Ciphertext& lhs, const Ciphertext& rhs,
                     const KeyPair& keys) {
  CheckBinary(HomomorphicOp::kAdd, lhs, rhs, keys);
  return Derived(lhs, RawAdd(lhs.payload, rhs.payload, keys));
}

Ciphertext CipherMultiply(const Ciphertext& lhs, const Ciphertext& rhs,
                          const KeyPair& keys) {
  CheckBinary(HomomorphicOp::kMultiply, lhs, rhs, keys);
  return Derived(lhs, RawMultiply(lhs.payload, rhs.payload, keys));
}

Ciphertext CipherXor(const Ciphertext& lhs, const Ciphertext& rhs,
                     const KeyPair& keys) {
  CheckBinary(HomomorphicOp::kXor, lhs, rhs, keys);
  return Derived(lhs, RawXor(lhs.payload, rhs.payload, keys));
}

Ciphertext CipherScalar(const RationalScalar& k, const Ciphertext& c,
                        const KeyPair& keys) {
  RequireCapability(keys.algorithm, HomomorphicOp::kScalar);
  CheckKey(c, keys, KeyFingerprint(keys));
  // Cancel the scalar numerator against the existing denominator so the
  // exponent and the cleartext scale stay as small as possible.
  const Natural g = nt::Gcd(k.numerator(), c.scale_denominator);
  const Natural exponent = k.numerator() / g;
  Ciphertext out = Derived(c, RawScalar(c.payload, exponent, keys));
  out.scale_denominator = c.scale_denominator / g * k.denominator();
  return out;
}

Ciphertext CipherRegenerate(const Ciphertext& c, const KeyPair& keys,
                            RandomSource& rng) {
  RequireCapability(keys.algorithm, HomomorphicOp::kRegenerate);
  CheckKey(c, keys, KeyFingerprint(keys));
  return Derived(c, Regenerate(c.payload, keys, rng));
}

}  // namespace phekit
