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

#include <array>
#include <memory>
#include <string>

#include "phekit/capability.h"
#include "phekit/errors.h"
#include "phekit/numtheory.h"
#include "src/schemes/scheme_impl.h"

namespace phekit {

namespace {

const std::array<std::unique_ptr<Scheme>, 10>& Schemes() {
  static const std::array<std::unique_ptr<Scheme>, 10> schemes = {
      internal::MakeRsa(),           internal::MakeGoldwasserMicali(),
      internal::MakeElGamal(),       internal::MakeExpElGamal(),
      internal::MakeBenaloh(),       internal::MakeEcElGamal(),
      internal::MakeNaccacheStern(), internal::MakeOkamotoUchiyama(),
      internal::MakePaillier(),      internal::MakeDamgardJurik(),
  };
  return schemes;
}

void RequireKind(Algorithm algorithm, const Payload& payload) {
  const PayloadKind expected = ExpectedPayloadKind(algorithm);
  const PayloadKind actual = KindOf(payload);
  if (expected != actual) {
    throw PayloadTypeError(std::string(AlgorithmId(algorithm)) +
                           " ciphertexts carry a '" +
                           std::string(PayloadKindName(expected)) +
                           "' payload, got '" +
                           std::string(PayloadKindName(actual)) + "'");
  }
}

}  // namespace

SchemeParams NormalizeParams(Algorithm algorithm, const SchemeParams& params) {
  SchemeParams out;
  switch (algorithm) {
    case Algorithm::kDamgardJurik:
      out.damgard_jurik_s = params.damgard_jurik_s;
      break;
    case Algorithm::kBenaloh:
      out.benaloh_block_size = params.benaloh_block_size;
      break;
    case Algorithm::kNaccacheStern:
      out.naccache_prime_count = params.naccache_prime_count;
      break;
    case Algorithm::kEcElGamal:
      out.curve = params.curve;
      out.dlp_bound = params.dlp_bound;
      break;
    case Algorithm::kExpElGamal:
      out.dlp_bound = params.dlp_bound;
      break;
    default:
      break;
  }
  return out;
}

KeyPair KeyPair::PublicOnly() const {
  KeyPair out = *this;
  out.private_key.reset();
  return out;
}

const Natural& KeyPair::Public(std::string_view name) const {
  auto it = public_key.find(name);
  if (it == public_key.end()) {
    throw DomainError("key is missing public component '" + std::string(name) +
                      "'");
  }
  return it->second;
}

const Natural& KeyPair::Private(std::string_view name) const {
  if (!private_key) {
    throw DomainError("operation requires the private key");
  }
  auto it = private_key->find(name);
  if (it == private_key->end()) {
    throw DomainError("key is missing private component '" +
                      std::string(name) + "'");
  }
  return it->second;
}

PayloadKind KindOf(const Payload& payload) {
  return static_cast<PayloadKind>(payload.index());
}

PayloadKind ExpectedPayloadKind(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGoldwasserMicali:
      return PayloadKind::kBits;
    case Algorithm::kElGamal:
    case Algorithm::kExpElGamal:
      return PayloadKind::kPair;
    case Algorithm::kEcElGamal:
      return PayloadKind::kPointPair;
    default:
      return PayloadKind::kSingle;
  }
}

std::string_view PayloadKindName(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::kSingle:
      return "single";
    case PayloadKind::kPair:
      return "pair";
    case PayloadKind::kBits:
      return "bits";
    case PayloadKind::kPointPair:
      return "point_pair";
  }
  return "unknown";
}

Payload Scheme::Add(const Payload&, const Payload&, const KeyPair&) const {
  throw CapabilityError(UnsupportedMessage(algorithm(), HomomorphicOp::kAdd));
}

Payload Scheme::Multiply(const Payload&, const Payload&,
                         const KeyPair&) const {
  throw CapabilityError(
      UnsupportedMessage(algorithm(), HomomorphicOp::kMultiply));
}

Payload Scheme::Xor(const Payload&, const Payload&, const KeyPair&) const {
  throw CapabilityError(UnsupportedMessage(algorithm(), HomomorphicOp::kXor));
}

Payload Scheme::ScalarMultiply(const Payload&, const Natural&,
                               const KeyPair&) const {
  throw CapabilityError(
      UnsupportedMessage(algorithm(), HomomorphicOp::kScalar));
}

Payload Scheme::Regenerate(const Payload& c, const KeyPair& keys,
                           RandomSource& rng) const {
  RequireCapability(algorithm(), HomomorphicOp::kRegenerate);
  return Add(c, Encrypt(keys, 0, rng), keys);
}

const Scheme& SchemeFor(Algorithm algorithm) {
  return *Schemes()[static_cast<int>(algorithm)];
}

KeyPair GenerateKeys(Algorithm algorithm, unsigned security_bits,
                     const SchemeParams& params, RandomSource& rng) {
  KeyPair keys = SchemeFor(algorithm).GenerateKeys(security_bits, params, rng);
  keys.params = NormalizeParams(algorithm, keys.params);
  return keys;
}

std::optional<Natural> PlaintextBound(const KeyPair& keys) {
  return SchemeFor(keys.algorithm).PlaintextBound(keys);
}

Natural PlaintextModulus(const KeyPair& keys) {
  return SchemeFor(keys.algorithm).PlaintextModulus(keys);
}

Payload Encrypt(const KeyPair& keys, const Natural& m, RandomSource& rng) {
  if (m < 0) throw PlaintextRangeError("plaintexts must be non-negative");
  if (auto bound = PlaintextBound(keys); bound && m >= *bound) {
    throw PlaintextRangeError(std::string(DisplayName(keys.algorithm)) +
                              " plaintext " + ToDecimal(m) +
                              " is out of range; it must be below " +
                              ToDecimal(*bound));
  }
  return SchemeFor(keys.algorithm).Encrypt(keys, m, rng);
}

Payload EncryptPadded(const KeyPair& keys, const Natural& m,
                      unsigned bit_width, RandomSource& rng) {
  if (keys.algorithm != Algorithm::kGoldwasserMicali) {
    throw DomainError("fixed-width encryption applies to goldwasser-micali "
                      "only");
  }
  if (m < 0) throw PlaintextRangeError("plaintexts must be non-negative");
  return internal::GoldwasserMicaliEncryptBits(keys, m, bit_width, rng);
}

Natural Decrypt(const KeyPair& keys, const Payload& c) {
  if (!keys.has_private()) {
    throw DomainError("decryption requires the private key");
  }
  RequireKind(keys.algorithm, c);
  return SchemeFor(keys.algorithm).Decrypt(keys, c);
}

Payload RawAdd(const Payload& lhs, const Payload& rhs, const KeyPair& keys) {
  RequireCapability(keys.algorithm, HomomorphicOp::kAdd);
  RequireKind(keys.algorithm, lhs);
  RequireKind(keys.algorithm, rhs);
  return SchemeFor(keys.algorithm).Add(lhs, rhs, keys);
}

Payload RawMultiply(const Payload& lhs, const Payload& rhs,
                    const KeyPair& keys) {
  RequireCapability(keys.algorithm, HomomorphicOp::kMultiply);
  RequireKind(keys.algorithm, lhs);
  RequireKind(keys.algorithm, rhs);
  return SchemeFor(keys.algorithm).Multiply(lhs, rhs, keys);
}

Payload RawXor(const Payload& lhs, const Payload& rhs, const KeyPair& keys) {
  RequireCapability(keys.algorithm, HomomorphicOp::kXor);
  RequireKind(keys.algorithm, lhs);
  RequireKind(keys.algorithm, rhs);
  return SchemeFor(keys.algorithm).Xor(lhs, rhs, keys);
}

Payload RawScalar(const Payload& c, const Natural& k, const KeyPair& keys) {
  RequireCapability(keys.algorithm, HomomorphicOp::kScalar);
  if (k < 0) throw DomainError("scalar must be non-negative");
  RequireKind(keys.algorithm, c);
  return SchemeFor(keys.algorithm).ScalarMultiply(c, k, keys);
}

Payload Regenerate(const Payload& c, const KeyPair& keys, RandomSource& rng) {
  RequireCapability(keys.algorithm, HomomorphicOp::kRegenerate);
  RequireKind(keys.algorithm, c);
  return SchemeFor(keys.algorithm).Regenerate(c, keys, rng);
}

namespace internal {

void RetryBudget::Spend() {
  if (++used_ > limit_) {
    throw KeygenExhaustedError(
        std::string(DisplayName(algorithm_)) +
        " key generation exhausted its retry budget of " +
        std::to_string(limit_) + " attempts at " +
        std::to_string(security_bits_) + " bits");
  }
}

std::pair<Natural, Natural> GenerateModulusPrimes(unsigned bits,
                                                  RandomSource& rng) {
  const unsigned p_bits = bits / 2;
  const unsigned q_bits = bits - p_bits;
  Natural p = nt::GeneratePrime(p_bits, rng);
  Natural q;
  do {
    q = nt::GeneratePrime(q_bits, rng);
  } while (q == p);
  return {std::move(p), std::move(q)};
}

std::pair<Natural, Natural> CofactorRange(const Natural& multiplier,
                                          unsigned bits) {
  Natural low_target;  // 3 * 2^(bits-2): top two bits set
  mpz_setbit(low_target.get_mpz_t(), bits - 1);
  mpz_setbit(low_target.get_mpz_t(), bits - 2);
  Natural high_target;  // 2^bits - 1
  mpz_setbit(high_target.get_mpz_t(), bits);
  high_target -= 1;
  Natural low;
  mpz_cdiv_q(low.get_mpz_t(), Natural(low_target - 1).get_mpz_t(),
             multiplier.get_mpz_t());
  Natural high = (high_target - 1) / multiplier;
  return {std::move(low), std::move(high)};
}

const Natural& Single(const Payload& payload) {
  return std::get<Natural>(payload);
}
const NaturalPair& Pair(const Payload& payload) {
  return std::get<NaturalPair>(payload);
}
const BitCiphertexts& Bits(const Payload& payload) {
  return std::get<BitCiphertexts>(payload);
}
const PointPair& Points(const Payload& payload) {
  return std::get<PointPair>(payload);
}

std::vector<Natural> SmallPrimeFactors(std::uint64_t value) {
  std::vector<Natural> out;
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    if (value % f != 0) continue;
    out.emplace_back(static_cast<unsigned long>(f));
    while (value % f == 0) value /= f;
  }
  if (value > 1) out.emplace_back(static_cast<unsigned long>(value));
  return out;
}

std::vector<Natural> FirstOddPrimes(unsigned count) {
  std::vector<Natural> out;
  for (unsigned long candidate = 3; out.size() < count; candidate += 2) {
    bool prime = true;
    for (unsigned long d = 3; d * d <= candidate; d += 2) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.emplace_back(candidate);
  }
  return out;
}

void RequireMinimumBits(Algorithm algorithm, unsigned bits, unsigned minimum) {
  if (bits < minimum) {
    throw DomainError(std::string(DisplayName(algorithm)) + " needs at least " +
                      std::to_string(minimum) + "-bit keys, got " +
                      std::to_string(bits));
  }
}

}  // namespace internal

}  // namespace phekit
