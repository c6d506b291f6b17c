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

#ifndef PHEKIT_NATURAL_H_
#define PHEKIT_NATURAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace phekit {

// Arbitrary-precision integer. Used for non-negative values throughout
// (plaintexts, moduli, exponents); egcd coefficients are the only signed use.
using Natural = mpz_class;
using Integer = mpz_class;

inline std::size_t BitLength(const Natural& value) {
  return value == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

inline std::string ToDecimal(const Natural& value) { return value.get_str(10); }

// Strict decimal parse: digits only, no sign, no whitespace. Throws ParseError
// naming 'field' on malformed input.
Natural ParseDecimal(std::string_view text, std::string_view field = "value");

}  // namespace phekit

#endif  // PHEKIT_NATURAL_H_
