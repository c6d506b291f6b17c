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

#ifndef PHEKIT_CAPABILITY_H_
#define PHEKIT_CAPABILITY_H_

#include <string>

#include "phekit/algorithm.h"

namespace phekit {

struct Capability {
  bool hom_mul = false;
  bool hom_add = false;
  bool scalar_mul = false;
  bool hom_xor = false;
  bool regeneration = false;

  friend bool operator==(const Capability&, const Capability&) = default;
};

enum class HomomorphicOp { kAdd, kMultiply, kXor, kScalar, kRegenerate };

Capability Capabilities(Algorithm algorithm);

bool Supports(Algorithm algorithm, HomomorphicOp op);

// The error text raised when 'op' is unsupported, e.g.
// "Paillier is not homomorphic with respect to the multiplication".
std::string UnsupportedMessage(Algorithm algorithm, HomomorphicOp op);

// Throws CapabilityError with UnsupportedMessage when 'op' is unsupported.
void RequireCapability(Algorithm algorithm, HomomorphicOp op);

}  // namespace phekit

#endif  // PHEKIT_CAPABILITY_H_
