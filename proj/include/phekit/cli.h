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

#ifndef PHEKIT_CLI_H_
#define PHEKIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace phekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapability = 3;
inline constexpr int kExitCrypto = 4;

// Runs the phe command line. 'args' excludes the program name. Payloads go
// to 'out', diagnostics to 'err'.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace phekit::cli

#endif  // PHEKIT_CLI_H_
