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

#include "phekit/natural.h"

#include <string>

#include "phekit/errors.h"

namespace phekit {

Natural ParseDecimal(std::string_view text, std::string_view field) {
  if (text.empty()) {
    throw ParseError("field '" + std::string(field) + "': empty number");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw ParseError("field '" + std::string(field) +
                       "': malformed decimal '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

}  // namespace phekit
