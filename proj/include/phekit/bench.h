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

#ifndef PHEKIT_BENCH_H_
#define PHEKIT_BENCH_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phekit/algorithm.h"
#include "phekit/random.h"

namespace phekit::bench {

// NIST-equivalent key sizes for one symmetric security level.
struct SecurityLevel {
  unsigned level;
  unsigned modulus_bits;
  unsigned curve_bits;
};

inline constexpr SecurityLevel kSecurityLevels[] = {
    {80, 1024, 160},
    {112, 2048, 224},
    {128, 3072, 256},
    {192, 7680, 384},
};

// Throws LookupError for levels outside the table.
const SecurityLevel& LevelFor(unsigned level);

// Modulus size used for every non-curve scheme in toy mode.
inline constexpr unsigned kToyModulusBits = 256;

enum class Operation { kKeygen, kEncrypt, kDecrypt, kHomomorphic, kSkip };

std::string_view OperationName(Operation op);
Operation ParseOperation(std::string_view name);

struct BenchPlan {
  std::vector<unsigned> levels = {80, 112, 128};
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms),
                                    std::end(kAllAlgorithms)};
  unsigned repetitions = 5;
  unsigned plaintext_bits = 18;
  // Runs Benaloh and Naccache-Stern, and shrinks every modulus to
  // kToyModulusBits. Curves stay at the level size.
  bool toy = false;
};

struct BenchRecord {
  Algorithm algorithm = Algorithm::kRsa;
  unsigned level = 0;
  unsigned key_size = 0;
  Operation operation = Operation::kKeygen;
  unsigned repetitions = 0;
  double mean_seconds = 0;  // unset for skip records
  std::string note;         // skip reason; not part of the CSV

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// Validates the plan (known levels, repetitions >= 1, plaintext_bits in
// [1, 20]) and throws DomainError otherwise.
void ValidatePlan(const BenchPlan& plan);

// Measures keygen, encrypt, decrypt and the native homomorphic operation
// for every (algorithm, level). Records come back in CSV order. 'progress',
// when given, receives one line per finished cell.
std::vector<BenchRecord> RunBench(const BenchPlan& plan, RandomSource& rng,
                                  std::ostream* progress = nullptr);

inline constexpr std::string_view kCsvHeader =
    "algorithm,level,key_size,operation,repetitions,mean_seconds";

std::string EmitCsv(const std::vector<BenchRecord>& records);
// Throws ParseError naming the line on malformed input.
std::vector<BenchRecord> ParseCsv(std::string_view text);

// Radar chart of one operation: an axis per algorithm in CSV order and a
// polygon per level, radii on a log scale. Throws DegenerateChartError with
// fewer than three algorithms measured for 'op'.
std::string EmitRadarSvg(const std::vector<BenchRecord>& records,
                         Operation op);

}  // namespace phekit::bench

#endif  // PHEKIT_BENCH_H_
