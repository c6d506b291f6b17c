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

#include "phekit/algorithm.h"

#include <cctype>
#include <string>

#include "phekit/capability.h"
#include "phekit/errors.h"

namespace phekit {

namespace {

struct AlgorithmInfo {
  std::string_view id;
  std::string_view display;
  Capability capability;  // mul, add, scalar, xor, regeneration
};

const AlgorithmInfo& Info(Algorithm algorithm) {
  static const AlgorithmInfo kTable[] = {
      {"rsa", "RSA", {true, false, false, false, false}},
      {"goldwasser-micali", "Goldwasser-Micali",
       {false, false, false, true, false}},
      {"elgamal", "ElGamal", {true, false, false, false, false}},
      {"exp-elgamal", "Exponential-ElGamal", {false, true, true, false, true}},
      {"benaloh", "Benaloh", {false, true, true, false, true}},
      {"ec-elgamal", "EllipticCurve-ElGamal",
       {false, true, true, false, false}},
      {"naccache-stern", "Naccache-Stern", {false, true, true, false, true}},
      {"okamoto-uchiyama", "Okamoto-Uchiyama",
       {false, true, true, false, true}},
      {"paillier", "Paillier", {false, true, true, false, true}},
      {"damgard-jurik", "Damgard-Jurik", {false, true, true, false, true}},
  };
  return kTable[static_cast<int>(algorithm)];
}

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace

std::string_view AlgorithmId(Algorithm algorithm) { return Info(algorithm).id; }

std::string_view DisplayName(Algorithm algorithm) {
  return Info(algorithm).display;
}

Algorithm ParseAlgorithm(std::string_view text) {
  const std::string needle = Lower(text);
  for (Algorithm algorithm : kAllAlgorithms) {
    if (needle == Info(algorithm).id || needle == Lower(Info(algorithm).display)) {
      return algorithm;
    }
  }
  std::string known;
  for (Algorithm algorithm : kAllAlgorithms) {
    if (!known.empty()) known += ", ";
    known += Info(algorithm).id;
  }
  throw LookupError("unknown algorithm '" + std::string(text) +
                    "'; available: " + known);
}

Capability Capabilities(Algorithm algorithm) {
  return Info(algorithm).capability;
}

bool Supports(Algorithm algorithm, HomomorphicOp op) {
  const Capability c = Capabilities(algorithm);
  switch (op) {
    case HomomorphicOp::kAdd:
      return c.hom_add;
    case HomomorphicOp::kMultiply:
      return c.hom_mul;
    case HomomorphicOp::kXor:
      return c.hom_xor;
    case HomomorphicOp::kScalar:
      return c.scalar_mul;
    case HomomorphicOp::kRegenerate:
      return c.regeneration;
  }
  return false;
}

std::string UnsupportedMessage(Algorithm algorithm, HomomorphicOp op) {
  const std::string name(DisplayName(algorithm));
  switch (op) {
    case HomomorphicOp::kAdd:
      return name + " is not homomorphic with respect to the addition";
    case HomomorphicOp::kMultiply:
      return name + " is not homomorphic with respect to the multiplication";
    case HomomorphicOp::kXor:
      return name + " is not homomorphic with respect to the exclusive or";
    case HomomorphicOp::kScalar:
      return name + " does not support scalar multiplication";
    case HomomorphicOp::kRegenerate:
      return name + " does not support ciphertext regeneration";
  }
  return name;
}

void RequireCapability(Algorithm algorithm, HomomorphicOp op) {
  if (!Supports(algorithm, op)) {
    throw CapabilityError(UnsupportedMessage(algorithm, op));
  }
}

}  // namespace phekit
