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

#include "phekit/cli.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "phekit/algebra.h"
#include "phekit/bench.h"
#include "phekit/capability.h"
#include "phekit/errors.h"

namespace phekit::cli {

namespace {

// File-system problems are reported as usage errors, not library errors.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) {
    throw FileError("cannot write '" + path + "'");
  }
}

KeyPair LoadKeys(const std::string& path) { return ParseKey(ReadFile(path)); }

Ciphertext LoadCiphertext(const std::string& path) {
  return ParseCiphertext(ReadFile(path));
}

RandomSource MakeRandom(std::ostream& err) {
  if (RandomSource::EnvironmentSeed()) {
    err << "warning: " << kTestSeedVariable
        << " is set; randomness is deterministic and unfit for real keys\n";
  }
  return RandomSource::FromEnvironment();
}

template <typename T>
std::vector<T> ParseList(const std::string& text,
                         T (*parse)(std::string_view)) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty list item in '" + text + "'");
    out.push_back(parse(item));
  }
  return out;
}

unsigned ParseLevel(std::string_view text) {
  const Natural value = ParseDecimal(text, "level");
  if (!value.fits_uint_p()) throw LookupError("level out of range");
  return bench::LevelFor(static_cast<unsigned>(value.get_ui())).level;
}

struct Options {
  std::string algorithm;
  std::optional<unsigned> key_size;
  std::string curve;
  std::optional<unsigned> s;
  std::optional<std::uint64_t> dlp_bound;
  std::optional<std::uint64_t> block_size;
  std::optional<unsigned> prime_count;
  std::string out;
  std::string public_out;
  std::string keys;
  std::string plaintext;
  std::optional<unsigned> bit_width;
  std::string in;
  bool rational = false;
  std::string left;
  std::string right;
  std::string scalar;
  std::string levels = "80,112,128";
  std::string algorithms;
  unsigned repetitions = 5;
  unsigned plaintext_bits = 18;
  std::string svg_dir;
  bool toy = false;
};

int Keygen(const Options& o, std::ostream& err) {
  const Algorithm algorithm = ParseAlgorithm(o.algorithm);
  SchemeParams params;
  if (o.s) params.damgard_jurik_s = *o.s;
  if (o.dlp_bound) params.dlp_bound = *o.dlp_bound;
  if (o.block_size) params.benaloh_block_size = *o.block_size;
  if (o.prime_count) params.naccache_prime_count = *o.prime_count;
  params.curve = o.curve;
  unsigned bits = 0;
  if (o.key_size) {
    bits = *o.key_size;
  } else if (algorithm != Algorithm::kEcElGamal || o.curve.empty()) {
    throw CLI::RequiredError("--key-size");
  }
  RandomSource rng = MakeRandom(err);
  const KeyPair keys = GenerateKeys(algorithm, bits, params, rng);
  WriteFile(o.out, SerializeKey(keys));
  if (!o.public_out.empty()) {
    WriteFile(o.public_out, SerializeKey(keys.PublicOnly()));
  }
  return kExitOk;
}

int Encrypt(const Options& o, std::ostream& err) {
  const KeyPair keys = LoadKeys(o.keys);
  const Natural m = ParseDecimal(o.plaintext, "plaintext");
  RandomSource rng = MakeRandom(err);
  WriteFile(o.out, SerializeCiphertext(EncryptValue(keys, m, rng, o.bit_width)));
  return kExitOk;
}

int Decrypt(const Options& o, std::ostream& out) {
  const KeyPair keys = LoadKeys(o.keys);
  const Ciphertext c = LoadCiphertext(o.in);
  if (o.rational) {
    const mpq_class value = DecryptScaled(keys, c);
    out << value.get_num().get_str() << '/' << value.get_den().get_str()
        << '\n';
  } else {
    out << ToDecimal(DecryptValue(keys, c)) << '\n';
  }
  return kExitOk;
}

int Binary(const Options& o,
           Ciphertext (*op)(const Ciphertext&, const Ciphertext&,
                            const KeyPair&)) {
  const KeyPair keys = LoadKeys(o.keys);
  const Ciphertext result =
      op(LoadCiphertext(o.left), LoadCiphertext(o.right), keys);
  WriteFile(o.out, SerializeCiphertext(result));
  return kExitOk;
}

int Smul(const Options& o) {
  const KeyPair keys = LoadKeys(o.keys);
  const RationalScalar k = RationalScalar::Parse(o.scalar);
  WriteFile(o.out, SerializeCiphertext(CipherScalar(k, LoadCiphertext(o.in), keys)));
  return kExitOk;
}

int Regen(const Options& o, std::ostream& err) {
  const KeyPair keys = LoadKeys(o.keys);
  const Ciphertext c = LoadCiphertext(o.in);
  RandomSource rng = MakeRandom(err);
  WriteFile(o.out, SerializeCiphertext(CipherRegenerate(c, keys, rng)));
  return kExitOk;
}

int Capabilities(const Options& o, std::ostream& out) {
  const Capability caps = phekit::Capabilities(ParseAlgorithm(o.algorithm));
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "mul=" << flag(caps.hom_mul) << " add=" << flag(caps.hom_add)
      << " scalar=" << flag(caps.scalar_mul) << " xor=" << flag(caps.hom_xor)
      << " regen=" << flag(caps.regeneration) << '\n';
  return kExitOk;
}

int Bench(const Options& o, std::ostream& err) {
  bench::BenchPlan plan;
  plan.repetitions = o.repetitions;
  plan.plaintext_bits = o.plaintext_bits;
  plan.toy = o.toy;
  try {
    plan.levels = ParseList<unsigned>(o.levels, &ParseLevel);
    if (!o.algorithms.empty()) {
      plan.algorithms = ParseList<Algorithm>(o.algorithms, &ParseAlgorithm);
    }
    bench::ValidatePlan(plan);
  } catch (const Error& e) {
    // A bad plan is a flag problem, not a cryptographic failure.
    throw CLI::ValidationError(e.what());
  }
  RandomSource rng = MakeRandom(err);
  const auto records = bench::RunBench(plan, rng, &err);
  WriteFile(o.out, bench::EmitCsv(records));
  if (!o.svg_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.svg_dir, ec);
    if (ec) throw FileError("cannot create '" + o.svg_dir + "'");
    for (bench::Operation op :
         {bench::Operation::kKeygen, bench::Operation::kEncrypt,
          bench::Operation::kDecrypt, bench::Operation::kHomomorphic}) {
      const std::string name(bench::OperationName(op));
      try {
        WriteFile((std::filesystem::path(o.svg_dir) / ("radar_" + name + ".svg"))
                      .string(),
                  bench::EmitRadarSvg(records, op));
      } catch (const DegenerateChartError& e) {
        err << "warning: no " << name << " chart: " << e.what() << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Partially homomorphic encryption toolkit", "phe"};
  app.require_subcommand(1);
  app.allow_extras(false);
  Options o;

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--algorithm", o.algorithm, "Algorithm id")->required();
  keygen->add_option("--key-size", o.key_size, "Modulus or curve size in bits");
  keygen->add_option("--curve", o.curve, "Named curve (ec-elgamal)");
  keygen->add_option("--s", o.s, "Damgard-Jurik exponent")
      ->check(CLI::PositiveNumber);
  keygen->add_option("--dlp-bound", o.dlp_bound,
                     "Discrete-log search bound (exp-elgamal, ec-elgamal)")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  keygen->add_option("--block-size", o.block_size, "Benaloh block size r")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  keygen->add_option("--prime-count", o.prime_count,
                     "Naccache-Stern small prime count")
      ->check(CLI::Range(2u, 64u));
  keygen->add_option("--out", o.out, "Key pair output file")->required();
  keygen->add_option("--public-out", o.public_out, "Public key output file");

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a decimal plaintext");
  encrypt->add_option("--keys", o.keys, "Key file")->required();
  encrypt->add_option("--plaintext", o.plaintext, "Decimal plaintext")
      ->required();
  encrypt->add_option("--bit-width", o.bit_width,
                      "Fixed bit width (goldwasser-micali)")
      ->check(CLI::Range(1u, 1u << 16));
  encrypt->add_option("--out", o.out, "Ciphertext output file")->required();

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--keys", o.keys, "Key file with private key")
      ->required();
  decrypt->add_option("--in", o.in, "Ciphertext file")->required();
  decrypt->add_flag("--rational", o.rational, "Print the exact value as p/q");

  struct BinarySpec {
    const char* name;
    const char* help;
    Ciphertext (*op)(const Ciphertext&, const Ciphertext&, const KeyPair&);
  };
  const BinarySpec binaries[] = {
      {"add", "Homomorphic addition", &CipherAdd},
      {"mul", "Homomorphic multiplication", &CipherMultiply},
      {"xor", "Homomorphic exclusive or", &CipherXor},
  };
  std::vector<std::pair<CLI::App*, const BinarySpec*>> binary_commands;
  for (const auto& spec : binaries) {
    auto* cmd = app.add_subcommand(spec.name, spec.help);
    cmd->add_option("--keys", o.keys, "Key file")->required();
    cmd->add_option("--left", o.left, "First ciphertext")->required();
    cmd->add_option("--right", o.right, "Second ciphertext")->required();
    cmd->add_option("--out", o.out, "Result file")->required();
    binary_commands.emplace_back(cmd, &spec);
  }

  auto* smul = app.add_subcommand("smul", "Multiply by a plaintext scalar");
  smul->add_option("--keys", o.keys, "Key file")->required();
  smul->add_option("--in", o.in, "Ciphertext file")->required();
  smul->add_option("--scalar", o.scalar, "Scalar such as 3, 1.05 or 7/4")
      ->required();
  smul->add_option("--out", o.out, "Result file")->required();

  auto* regen = app.add_subcommand("regen", "Re-randomize a ciphertext");
  regen->add_option("--keys", o.keys, "Key file")->required();
  regen->add_option("--in", o.in, "Ciphertext file")->required();
  regen->add_option("--out", o.out, "Result file")->required();

  auto* capabilities =
      app.add_subcommand("capabilities", "Show supported operations");
  capabilities->add_option("--algorithm", o.algorithm, "Algorithm id")
      ->required();

  auto* bench_cmd = app.add_subcommand("bench", "Run the timing harness");
  bench_cmd->add_option("--levels", o.levels,
                        "Comma-separated levels from 80,112,128,192");
  bench_cmd->add_option("--algorithms", o.algorithms,
                        "Comma-separated algorithm ids (default all)");
  bench_cmd->add_option("--repetitions", o.repetitions, "Repetitions")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--plaintext-bits", o.plaintext_bits,
                        "Plaintext size in bits")
      ->check(CLI::Range(1u, 20u));
  bench_cmd->add_option("--out", o.out, "CSV output file")->required();
  bench_cmd->add_option("--svg-dir", o.svg_dir, "Directory for radar charts");
  bench_cmd->add_flag("--toy", o.toy,
                      "Small moduli; also runs Benaloh and Naccache-Stern");

  std::vector<const char*> argv{"phe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) return Keygen(o, err);
    if (encrypt->parsed()) return Encrypt(o, err);
    if (decrypt->parsed()) return Decrypt(o, out);
    for (const auto& [cmd, spec] : binary_commands) {
      if (cmd->parsed()) return Binary(o, spec->op);
    }
    if (smul->parsed()) return Smul(o);
    if (regen->parsed()) return Regen(o, err);
    if (capabilities->parsed()) return Capabilities(o, out);
    if (bench_cmd->parsed()) return Bench(o, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    // Unknown algorithm or curve names come straight from flags.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCrypto;
  }
  return kExitUsage;
}

}  // namespace phekit::cli
