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

#include "phekit/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "phekit/capability.h"
#include "phekit/errors.h"
#include "phekit/schemes.h"

namespace phekit::bench {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Operation kMeasured[] = {Operation::kKeygen, Operation::kEncrypt,
                                   Operation::kDecrypt,
                                   Operation::kHomomorphic};

bool ExcludedUnlessToy(Algorithm algorithm) {
  return algorithm == Algorithm::kBenaloh ||
         algorithm == Algorithm::kNaccacheStern;
}

unsigned KeySize(Algorithm algorithm, const SecurityLevel& level, bool toy) {
  if (algorithm == Algorithm::kEcElGamal) return level.curve_bits;
  return toy ? kToyModulusBits : level.modulus_bits;
}

template <typename F>
double Seconds(F&& body) {
  const auto start = Clock::now();
  body();
  const std::chrono::duration<double> elapsed = Clock::now() - start;
  // Clock granularity can report zero for the cheapest operations.
  return std::max(elapsed.count(), 1e-9);
}

Payload EncryptFor(const KeyPair& keys, const Natural& m, unsigned width,
                   RandomSource& rng) {
  if (keys.algorithm == Algorithm::kGoldwasserMicali) {
    return EncryptPadded(keys, m, width, rng);
  }
  return Encrypt(keys, m, rng);
}

Payload NativeOperation(const Payload& lhs, const Payload& rhs,
                        const KeyPair& keys) {
  const Capability caps = Capabilities(keys.algorithm);
  if (caps.hom_add) return RawAdd(lhs, rhs, keys);
  if (caps.hom_mul) return RawMultiply(lhs, rhs, keys);
  return RawXor(lhs, rhs, keys);
}

// One (algorithm, level) cell: four records, or a single skip record.
std::vector<BenchRecord> MeasureCell(Algorithm algorithm,
                                     const SecurityLevel& level,
                                     const BenchPlan& plan,
                                     RandomSource& rng) {
  const unsigned key_size = KeySize(algorithm, level, plan.toy);
  auto skip = [&](std::string note) {
    return std::vector<BenchRecord>{{algorithm, level.level, key_size,
                                     Operation::kSkip, 0, 0,
                                     std::move(note)}};
  };
  if (ExcludedUnlessToy(algorithm) && !plan.toy) {
    return skip("key generation is impractical at " +
                std::to_string(key_size) + " bits; rerun with --toy");
  }

  double totals[4] = {0, 0, 0, 0};
  try {
    for (unsigned rep = 0; rep < plan.repetitions; ++rep) {
      std::optional<KeyPair> keys;
      totals[0] += Seconds(
          [&] { keys = GenerateKeys(algorithm, key_size, SchemeParams{}, rng); });
      const Natural m1 = rng.Bits(plan.plaintext_bits);
      const Natural m2 = rng.Bits(plan.plaintext_bits);
      Payload c1;
      totals[1] += Seconds(
          [&] { c1 = EncryptFor(*keys, m1, plan.plaintext_bits, rng); });
      const Payload c2 = EncryptFor(*keys, m2, plan.plaintext_bits, rng);
      Natural recovered;
      totals[2] += Seconds([&] { recovered = Decrypt(*keys, c1); });
      if (recovered != m1) {
        throw DomainError("decryption mismatch during benchmark");
      }
      totals[3] += Seconds([&] { NativeOperation(c1, c2, *keys); });
    }
  } catch (const Error& e) {
    return skip(e.what());
  }

  std::vector<BenchRecord> out;
  for (int i = 0; i < 4; ++i) {
    out.push_back({algorithm, level.level, key_size, kMeasured[i],
                   plan.repetitions, totals[i] / plan.repetitions, ""});
  }
  return out;
}

std::string FormatSeconds(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.5e", seconds);
  return buffer;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

unsigned ParseUnsigned(std::string_view text, const std::string& where) {
  const Natural value = ParseDecimal(text, where);
  if (!value.fits_uint_p()) throw ParseError(where + " is out of range");
  return static_cast<unsigned>(value.get_ui());
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

const SecurityLevel& LevelFor(unsigned level) {
  for (const auto& entry : kSecurityLevels) {
    if (entry.level == level) return entry;
  }
  throw LookupError("unknown security level " + std::to_string(level) +
                    "; expected one of 80, 112, 128, 192");
}

std::string_view OperationName(Operation op) {
  switch (op) {
    case Operation::kKeygen: return "keygen";
    case Operation::kEncrypt: return "encrypt";
    case Operation::kDecrypt: return "decrypt";
    case Operation::kHomomorphic: return "homop";
    case Operation::kSkip: return "skip";
  }
  return "";
}

Operation ParseOperation(std::string_view name) {
  for (Operation op : {Operation::kKeygen, Operation::kEncrypt,
                       Operation::kDecrypt, Operation::kHomomorphic,
                       Operation::kSkip}) {
    if (OperationName(op) == name) return op;
  }
  throw ParseError("unknown bench operation '" + std::string(name) + "'");
}

void ValidatePlan(const BenchPlan& plan) {
  if (plan.levels.empty() || plan.algorithms.empty()) {
    throw DomainError("bench plan needs at least one level and algorithm");
  }
  for (unsigned level : plan.levels) {
    try {
      LevelFor(level);
    } catch (const LookupError& e) {
      throw DomainError(e.what());
    }
  }
  if (plan.repetitions < 1) throw DomainError("repetitions must be >= 1");
  if (plan.plaintext_bits < 1 || plan.plaintext_bits > 20) {
    throw DomainError("plaintext bits must lie in [1, 20]");
  }
}

std::vector<BenchRecord> RunBench(const BenchPlan& plan, RandomSource& rng,
                                  std::ostream* progress) {
  ValidatePlan(plan);
  std::vector<Algorithm> algorithms;
  for (Algorithm a : kAllAlgorithms) {
    if (std::find(plan.algorithms.begin(), plan.algorithms.end(), a) !=
        plan.algorithms.end()) {
      algorithms.push_back(a);
    }
  }
  std::vector<unsigned> levels = plan.levels;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<BenchRecord> records;
  for (Algorithm algorithm : algorithms) {
    for (unsigned level : levels) {
      auto cell = MeasureCell(algorithm, LevelFor(level), plan, rng);
      if (progress) {
        *progress << AlgorithmId(algorithm) << " level " << level << ": ";
        if (cell.front().operation == Operation::kSkip) {
          *progress << "skipped (" << cell.front().note << ")\n";
        } else {
          *progress << "keygen " << FormatSeconds(cell.front().mean_seconds)
                    << " s\n";
        }
      }
      records.insert(records.end(), cell.begin(), cell.end());
    }
  }
  return records;
}

std::string EmitCsv(const std::vector<BenchRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += AlgorithmId(r.algorithm);
    out += ',' + std::to_string(r.level) + ',' + std::to_string(r.key_size) +
           ',' + std::string(OperationName(r.operation)) + ',' +
           std::to_string(r.repetitions) + ',';
    if (r.operation != Operation::kSkip) out += FormatSeconds(r.mean_seconds);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> ParseCsv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  unsigned number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = "bench CSV line " + std::to_string(number);
    if (number == 1) {
      if (line != kCsvHeader) throw ParseError(where + ": unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 6) {
      throw ParseError(where + ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    }
    BenchRecord r;
    try {
      r.algorithm = ParseAlgorithm(fields[0]);
    } catch (const LookupError& e) {
      throw ParseError(where + ": " + e.what());
    }
    r.level = ParseUnsigned(fields[1], where + " level");
    r.key_size = ParseUnsigned(fields[2], where + " key_size");
    r.operation = ParseOperation(fields[3]);
    r.repetitions = ParseUnsigned(fields[4], where + " repetitions");
    if (r.operation == Operation::kSkip) {
      if (!fields[5].empty()) {
        throw ParseError(where + ": skip rows carry no timing");
      }
    } else {
      const std::string seconds(fields[5]);
      std::size_t used = 0;
      try {
        r.mean_seconds = std::stod(seconds, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != seconds.size() || !(r.mean_seconds > 0)) {
        throw ParseError(where + ": mean_seconds must be a positive number");
      }
    }
    records.push_back(std::move(r));
  }
  if (number == 0) throw ParseError("bench CSV is empty");
  return records;
}

std::string EmitRadarSvg(const std::vector<BenchRecord>& records,
                         Operation op) {
  std::vector<Algorithm> axes;
  std::vector<unsigned> levels;
  std::map<std::pair<Algorithm, unsigned>, double> value;
  for (Algorithm a : kAllAlgorithms) {
    for (const auto& r : records) {
      if (r.algorithm != a || r.operation != op) continue;
      value[{a, r.level}] = r.mean_seconds;
      if (axes.empty() || axes.back() != a) axes.push_back(a);
      if (std::find(levels.begin(), levels.end(), r.level) == levels.end()) {
        levels.push_back(r.level);
      }
    }
  }
  if (axes.size() < 3) {
    throw DegenerateChartError(
        "a radar chart needs at least three algorithms measured for " +
        std::string(OperationName(op)) + ", got " +
        std::to_string(axes.size()));
  }
  std::sort(levels.begin(), levels.end());

  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (const auto& [key, seconds] : value) {
    lo = std::min(lo, std::log10(seconds));
    hi = std::max(hi, std::log10(seconds));
  }
  // Innermost ring sits one decade below the fastest time so that it is
  // still visible.
  const double floor = std::floor(lo) - 1;
  const double ceiling = std::max(std::ceil(hi), floor + 1);

  constexpr double kCenter = 300, kRadius = 200;
  auto radius = [&](double seconds) {
    return kRadius * (std::log10(seconds) - floor) / (ceiling - floor);
  };
  struct Xy {
    double x, y;
  };
  auto point = [&](std::size_t axis, double r) {
    const double angle = -std::numbers::pi / 2 +
                         2 * std::numbers::pi * axis / axes.size();
    return Xy{kCenter + r * std::cos(angle), kCenter + r * std::sin(angle)};
  };
  auto coords = [](Xy p) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f,%.2f", p.x, p.y);
    return std::string(buffer);
  };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd"};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
         "height=\"640\" viewBox=\"0 0 600 640\" font-family=\"sans-serif\" "
         "font-size=\"12\">\n"
      << "<title>" << OperationName(op) << " mean seconds (log scale)</title>\n"
      << "<rect width=\"600\" height=\"640\" fill=\"white\"/>\n";
  for (double decade = floor + 1; decade <= ceiling; decade += 1) {
    const double r = kRadius * (decade - floor) / (ceiling - floor);
    svg << "<circle cx=\"300\" cy=\"300\" r=\"" << r
        << "\" fill=\"none\" stroke=\"#ddd\"/>\n"
        << "<text x=\"304\" y=\"" << kCenter - r - 2
        << "\" fill=\"#999\">1e" << static_cast<int>(decade) << " s</text>\n";
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Xy tip = point(i, kRadius);
    const Xy label = point(i, kRadius + 24);
    svg << "<line x1=\"300\" y1=\"300\" x2=\"" << tip.x << "\" y2=\"" << tip.y
        << "\" stroke=\"#bbb\"/>\n"
        << "<text x=\"" << label.x << "\" y=\"" << label.y
        << "\" text-anchor=\"middle\">" << Escape(DisplayName(axes[i]))
        << "</text>\n";
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const char* color = kColors[l % std::size(kColors)];
    svg << "<polygon data-level=\"" << levels[l] << "\" points=\"";
    for (std::size_t i = 0; i < axes.size(); ++i) {
      auto it = value.find({axes[i], levels[l]});
      const double r = it == value.end() ? 0 : radius(it->second);
      svg << (i ? " " : "") << coords(point(i, r));
    }
    svg << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\""
        << color << "\" stroke-width=\"2\"/>\n";
    svg << "<rect x=\"20\" y=\"" << 560 + 20 * l
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n"
        << "<text x=\"40\" y=\"" << 571 + 20 * l << "\">level " << levels[l]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace phekit::bench
