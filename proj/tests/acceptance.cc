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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phekit/algebra.h"
#include "phekit/bench.h"
#include "phekit/capability.h"
#include "phekit/ec.h"
#include "phekit/errors.h"
#include "phekit/schemes.h"
#include "tests/test_keys.h"

namespace phekit {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass;
  std::string detail;
};

// Collects failures without stopping at the first one.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && failures_.size() < 5) failures_.push_back(what);
    if (!condition) ++failed_;
  }
  Outcome Result(const std::string& summary) const {
    if (failed_ == 0) {
      return {true, summary + ", " + std::to_string(checks_) + " checks"};
    }
    std::string detail = std::to_string(failed_) + "/" +
                         std::to_string(checks_) + " checks failed:";
    for (const auto& f : failures_) detail += " [" + f + "]";
    return {false, detail};
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string Id(Algorithm a) { return std::string(AlgorithmId(a)); }

// Criterion 1.
Outcome RoundTrips() {
  Checker check;
  RandomSource rng(1001);
  for (Algorithm a : kAllAlgorithms) {
    const testing::ToySetup toy = testing::Toy(a);
    SchemeParams full;
    unsigned full_bits = 1024;
    if (a == Algorithm::kEcElGamal) {
      full.curve = "secp160r1";
      full_bits = 160;
    }
    const KeyPair sets[] = {GenerateKeys(a, toy.bits, toy.params, rng),
                            GenerateKeys(a, full_bits, full, rng)};
    for (const KeyPair& keys : sets) {
      for (int i = 0; i < 100; ++i) {
        const Natural m = rng.Bits(18);
        check.Expect(Decrypt(keys, Encrypt(keys, m, rng)) == m,
                     Id(a) + " m=" + ToDecimal(m));
      }
    }
  }
  return check.Result("10 schemes x {toy, 1024-bit/secp160r1} x 100");
}

// Criterion 2.
Outcome HomomorphicLaws() {
  Checker check;
  RandomSource rng(1002);
  for (Algorithm a : kAllAlgorithms) {
    const KeyPair keys = testing::ToyKeys(a, rng);
    const Capability caps = Capabilities(a);
    const Natural modulus = PlaintextModulus(keys);
    for (int i = 0; i < 100; ++i) {
      const Natural m1 = rng.Bits(18), m2 = rng.Bits(18);
      if (caps.hom_add) {
        const Payload sum =
            RawAdd(Encrypt(keys, m1, rng), Encrypt(keys, m2, rng), keys);
        check.Expect(Decrypt(keys, sum) == (m1 + m2) % modulus, Id(a) + " add");
      } else if (caps.hom_mul) {
        const Payload product =
            RawMultiply(Encrypt(keys, m1, rng), Encrypt(keys, m2, rng), keys);
        check.Expect(Decrypt(keys, product) == m1 * m2 % modulus,
                     Id(a) + " mul");
      } else {
        const Payload x = RawXor(EncryptPadded(keys, m1, 18, rng),
                                 EncryptPadded(keys, m2, 18, rng), keys);
        check.Expect(Decrypt(keys, x) == (m1 ^ m2), Id(a) + " xor");
      }
    }
  }
  return check.Result("7 additive, 2 multiplicative, 1 xor scheme x 100");
}

struct Command {
  int code;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Command RunCli(const fs::path& dir, const std::string& args) {
  const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
  const std::string command = "cd '" + dir.string() +
                              "' && PHE_TEST_SEED=2024 '" PHE_CLI_PATH "' " +
                              args + " >'" + out.string() + "' 2>'" +
                              err.string() + "'";
  const int status = std::system(command.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, Slurp(out), Slurp(err)};
}

fs::path MakeTempDir() {
  std::string pattern =
      (fs::temp_directory_path() / "phe_acceptance_XXXXXX").string();
  if (!::mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
  return pattern;
}

// Criterion 3.
Outcome CliGoldens() {
  Checker check;
  const fs::path dir = MakeTempDir();
  auto step = [&](const std::string& args, int code, const std::string& out,
                  const std::string& err_fragment = "") {
    const Command r = RunCli(dir, args);
    check.Expect(r.code == code, args + " exit " + std::to_string(r.code));
    if (!out.empty()) check.Expect(r.out == out, args + " printed " + r.out);
    if (!err_fragment.empty()) {
      check.Expect(r.err.find(err_fragment) != std::string::npos,
                   args + " stderr " + r.err);
    }
  };
  step("keygen --algorithm paillier --key-size 1024 --out keys.json "
       "--public-out pub.json",
       0, "");
  // Listing 2.
  step("encrypt --keys pub.json --plaintext 17 --out c.json", 0, "");
  step("decrypt --keys keys.json --in c.json", 0, "17\n");
  // Listing 3.
  step("encrypt --keys pub.json --plaintext 10000 --out c1.json", 0, "");
  step("encrypt --keys pub.json --plaintext 500 --out c2.json", 0, "");
  step("add --keys pub.json --left c1.json --right c2.json --out c3.json", 0,
       "");
  step("decrypt --keys keys.json --in c3.json", 0, "10500\n");
  // Listing 4.
  step("smul --keys pub.json --in c1.json --scalar 1.05 --out c4.json", 0, "");
  step("decrypt --keys keys.json --in c4.json", 0, "10500\n");
  // Listing 5.
  step("mul --keys pub.json --left c1.json --right c2.json --out c5.json", 3,
       "", "Paillier is not homomorphic with respect to the multiplication");
  step("xor --keys pub.json --left c1.json --right c2.json --out c5.json", 3,
       "", "Paillier is not homomorphic with respect to the exclusive or");
  fs::remove_all(dir);
  return check.Result("Listings 2-5 through the phe binary");
}

// Criterion 4.
Outcome CapabilityMatrix() {
  Checker check;
  RandomSource rng(1004);
  int cells = 0;
  for (Algorithm a : kAllAlgorithms) {
    const KeyPair keys = testing::ToyKeys(a, rng);
    const Capability caps = Capabilities(a);
    const std::optional<unsigned> width =
        a == Algorithm::kGoldwasserMicali ? std::optional<unsigned>(4)
                                          : std::nullopt;
    const Ciphertext c1 = EncryptValue(keys, 6, rng, width);
    const Ciphertext c2 = EncryptValue(keys, 5, rng, width);
    struct Cell {
      HomomorphicOp op;
      bool supported;
      std::function<Natural()> run;
      Natural expected;
    };
    const Cell row[] = {
        {HomomorphicOp::kAdd, caps.hom_add,
         [&] { return DecryptValue(keys, CipherAdd(c1, c2, keys)); }, 11},
        {HomomorphicOp::kMultiply, caps.hom_mul,
         [&] { return DecryptValue(keys, CipherMultiply(c1, c2, keys)); }, 30},
        {HomomorphicOp::kXor, caps.hom_xor,
         [&] { return DecryptValue(keys, CipherXor(c1, c2, keys)); }, 3},
        {HomomorphicOp::kScalar, caps.scalar_mul,
         [&] {
           return DecryptValue(keys,
                               CipherScalar(RationalScalar(3, 1), c1, keys));
         },
         18},
        {HomomorphicOp::kRegenerate, caps.regeneration,
         [&] { return DecryptValue(keys, CipherRegenerate(c1, keys, rng)); },
         6},
    };
    for (const Cell& cell : row) {
      ++cells;
      const std::string label = Id(a) + " op" +
                                std::to_string(static_cast<int>(cell.op));
      try {
        const Natural got = cell.run();
        check.Expect(cell.supported, label + " should have been rejected");
        check.Expect(got == cell.expected, label + " wrong result");
      } catch (const CapabilityError& e) {
        check.Expect(!cell.supported, label + " rejected: " + e.what());
        check.Expect(std::string(e.what()) == UnsupportedMessage(a, cell.op),
                     label + " message: " + e.what());
      }
    }
  }
  check.Expect(cells == 50, "cell count " + std::to_string(cells));
  check.Expect(UnsupportedMessage(Algorithm::kPaillier,
                                  HomomorphicOp::kMultiply) ==
                   "Paillier is not homomorphic with respect to the "
                   "multiplication",
               "frozen multiplication text");
  check.Expect(UnsupportedMessage(Algorithm::kRsa, HomomorphicOp::kAdd) ==
                   "RSA is not homomorphic with respect to the addition",
               "frozen addition text");
  check.Expect(UnsupportedMessage(Algorithm::kPaillier, HomomorphicOp::kXor) ==
                   "Paillier is not homomorphic with respect to the exclusive "
                   "or",
               "frozen xor text");
  return check.Result("50 cells per Table 1");
}

// Criterion 5.
Outcome Regeneration() {
  Checker check;
  RandomSource rng(1005);
  int schemes = 0;
  for (Algorithm a : kAllAlgorithms) {
    if (!Capabilities(a).regeneration) continue;
    ++schemes;
    const KeyPair keys = testing::ToyKeys(a, rng);
    const Natural m = rng.Bits(18);
    const Ciphertext c = EncryptValue(keys, m, rng);
    const std::string original = SerializeCiphertext(c);
    std::set<std::string> seen = {original};
    for (int i = 0; i < 100; ++i) {
      const Ciphertext fresh = CipherRegenerate(c, keys, rng);
      check.Expect(seen.insert(SerializeCiphertext(fresh)).second,
                   Id(a) + " repeated payload");
      check.Expect(DecryptValue(keys, fresh) == m, Id(a) + " plaintext changed");
    }
  }
  check.Expect(schemes == 6, "regenerating schemes " + std::to_string(schemes));
  return check.Result("6 schemes x 100 regenerations, no collisions");
}

// Criterion 6.
Outcome OracleFixtures() {
  Checker check;
  {
    const KeyPair k = testing::FixtureRsa();
    RandomSource rng(1);
    check.Expect(Encrypt(k, 65, rng) == Payload(Natural(2790)), "RSA 65->2790");
    check.Expect(Decrypt(k, Natural(2790)) == 65, "RSA 2790->65");
  }
  {
    const KeyPair k = testing::FixtureElGamal();
    check.Expect(Decrypt(k, NaturalPair{10, 14}) == 10, "ElGamal (10,14)->10");
    bool hit = false;
    for (std::uint64_t seed = 0; seed < 200 && !hit; ++seed) {
      RandomSource rng(seed);
      hit = Encrypt(k, 10, rng) == Payload(NaturalPair{10, 14});
    }
    check.Expect(hit, "ElGamal 10 -> (10,14) at r=3");
  }
  {
    const KeyPair k = testing::FixturePaillier();
    check.Expect(Decrypt(k, Natural(83)) == 7, "Paillier 83->7");
    bool hit = false;
    for (std::uint64_t seed = 0; seed < 500 && !hit; ++seed) {
      RandomSource rng(seed);
      hit = Encrypt(k, 7, rng) == Payload(Natural(83));
    }
    check.Expect(hit, "Paillier 7 -> 83 at r=2");
  }
  {
    const KeyPair k = testing::FixtureGoldwasserMicali();
    check.Expect(Decrypt(k, BitCiphertexts{24}) == 1, "GM 24 -> 1");
    bool hit = false;
    for (std::uint64_t seed = 0; seed < 2000 && !hit; ++seed) {
      RandomSource rng(seed);
      hit = Encrypt(k, 1, rng) == Payload(BitCiphertexts{24});
    }
    check.Expect(hit, "GM bit 1 -> 24 at r=2");
  }
  {
    const ec::CurveParams& curve = ec::GetCurve("toy17");
    const ec::CurvePoint g = curve.generator;
    check.Expect(g == ec::CurvePoint(5, 1), "toy17 G");
    check.Expect(ec::ScalarMul(2, g, curve) == ec::CurvePoint(6, 3), "2G");
    check.Expect(ec::ScalarMul(3, g, curve) == ec::CurvePoint(10, 6), "3G");
    check.Expect(ec::ScalarMul(19, g, curve).is_identity(), "19G");
  }
  return check.Result("RSA, ElGamal, Paillier, GM, toy17 vectors");
}

// Criterion 7.
Outcome ScalarLaw() {
  Checker check;
  RandomSource rng(1007);
  for (Algorithm a : kAllAlgorithms) {
    if (!Capabilities(a).scalar_mul) continue;
    // k < 2^10 times m < 2^18 needs a plaintext space above 2^28.
    unsigned bits = 64;
    SchemeParams params;
    params.dlp_bound = std::uint64_t{1} << 28;
    switch (a) {
      case Algorithm::kEcElGamal:
        bits = 160;
        params.curve = "secp160r1";
        break;
      case Algorithm::kBenaloh:
        bits = 96;
        params.benaloh_block_size = 268435459;
        break;
      case Algorithm::kNaccacheStern:
        params.naccache_prime_count = 9;
        break;
      case Algorithm::kOkamotoUchiyama:
        bits = 96;
        break;
      default:
        break;
    }
    const KeyPair keys = GenerateKeys(a, bits, params, rng);
    for (int i = 0; i < 100; ++i) {
      const Natural m = rng.Bits(18);
      const Natural k = rng.Bits(10);
      const Ciphertext c = EncryptValue(keys, m, rng);
      check.Expect(
          DecryptValue(keys, CipherScalar(RationalScalar(k, 1), c, keys)) ==
              k * m,
          Id(a) + " k=" + ToDecimal(k) + " m=" + ToDecimal(m));
      if (i < 10) {
        const RationalScalar q(rng.Bits(10), rng.Between(1, 20));
        mpq_class expected(m * q.numerator(), q.denominator());
        expected.canonicalize();
        check.Expect(DecryptScaled(keys, CipherScalar(q, c, keys)) == expected,
                     Id(a) + " rational");
      }
    }
  }
  return check.Result("7 schemes x 100 integer scalars plus rationals");
}

// Criterion 8.
Outcome Bench() {
  Checker check;
  const fs::path dir = MakeTempDir();
  const auto start = std::chrono::steady_clock::now();
  const Command r = RunCli(dir, "bench --levels 80 --repetitions 5 --out b.csv");
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  check.Expect(r.code == 0, "bench exit " + std::to_string(r.code) + " " + r.err);
  check.Expect(seconds < 600, "bench took " + std::to_string(seconds) + " s");
  std::vector<bench::BenchRecord> records;
  try {
    records = bench::ParseCsv(Slurp(dir / "b.csv"));
  } catch (const Error& e) {
    check.Expect(false, std::string("CSV did not parse: ") + e.what());
  }
  std::map<bench::Operation, int> per_operation;
  std::set<Algorithm> skipped;
  double ec_keygen = 0, rsa_keygen = 0;
  for (const auto& rec : records) {
    if (rec.operation == bench::Operation::kSkip) {
      skipped.insert(rec.algorithm);
      continue;
    }
    ++per_operation[rec.operation];
    check.Expect(rec.repetitions == 5, "repetitions column");
    if (rec.operation == bench::Operation::kKeygen) {
      if (rec.algorithm == Algorithm::kEcElGamal) ec_keygen = rec.mean_seconds;
      if (rec.algorithm == Algorithm::kRsa) rsa_keygen = rec.mean_seconds;
    }
  }
  for (auto op : {bench::Operation::kKeygen, bench::Operation::kEncrypt,
                  bench::Operation::kDecrypt, bench::Operation::kHomomorphic}) {
    check.Expect(per_operation[op] == 8,
                 std::string(bench::OperationName(op)) + " rows " +
                     std::to_string(per_operation[op]));
  }
  check.Expect(skipped == std::set<Algorithm>{Algorithm::kBenaloh,
                                              Algorithm::kNaccacheStern},
               "skip rows");
  check.Expect(ec_keygen > 0 && rsa_keygen > 0 && ec_keygen < rsa_keygen,
               "EC keygen " + std::to_string(ec_keygen) + " vs RSA " +
                   std::to_string(rsa_keygen));
  fs::remove_all(dir);
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "level 80 in %.1f s, 32 measured rows + 2 skips, EC keygen "
                "%.2e s < RSA keygen %.2e s",
                seconds, ec_keygen, rsa_keygen);
  return check.Result(buffer);
}

// Criterion 9.
Outcome NistMapping() {
  Checker check;
  const unsigned expected[][3] = {
      {80, 1024, 160}, {112, 2048, 224}, {128, 3072, 256}, {192, 7680, 384}};
  RandomSource rng(1009);
  for (const auto& row : expected) {
    const bench::SecurityLevel& level = bench::LevelFor(row[0]);
    check.Expect(level.modulus_bits == row[1] && level.curve_bits == row[2],
                 "level " + std::to_string(row[0]));
    const KeyPair rsa = GenerateKeys(Algorithm::kRsa, level.modulus_bits, {}, rng);
    check.Expect(BitLength(rsa.Public("n")) == row[1],
                 "RSA modulus at level " + std::to_string(row[0]));
    const KeyPair ec =
        GenerateKeys(Algorithm::kEcElGamal, level.curve_bits, {}, rng);
    check.Expect(ec.security_bits == row[2] &&
                     ec::GetCurve(ec.params.curve).bits() == row[2],
                 "curve at level " + std::to_string(row[0]));
  }
  const fs::path dir = MakeTempDir();
  const Command r =
      RunCli(dir, "bench --levels 80,112,128,192 --algorithms ec-elgamal,paillier "
                  "--repetitions 1 --out b.csv");
  check.Expect(r.code == 0, "bench exit " + std::to_string(r.code));
  std::set<std::pair<unsigned, unsigned>> seen;
  for (const auto& rec : bench::ParseCsv(Slurp(dir / "b.csv"))) {
    seen.insert({rec.level, rec.key_size});
  }
  const std::set<std::pair<unsigned, unsigned>> want = {
      {80, 160},  {80, 1024},  {112, 224}, {112, 2048},
      {128, 256}, {128, 3072}, {192, 384}, {192, 7680}};
  check.Expect(seen == want, "bench key_size column");
  fs::remove_all(dir);
  return check.Result("{80,112,128,192} -> {1024/160, 2048/224, 3072/256, "
                      "7680/384}");
}

}  // namespace
}  // namespace phekit

int main() {
  using phekit::Outcome;
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "roundtrip", &phekit::RoundTrips},
      {2, "homomorphic laws", &phekit::HomomorphicLaws},
      {3, "paper workflow goldens", &phekit::CliGoldens},
      {4, "capability matrix", &phekit::CapabilityMatrix},
      {5, "regeneration", &phekit::Regeneration},
      {6, "oracle fixtures", &phekit::OracleFixtures},
      {7, "scalar law", &phekit::ScalarLaw},
      {8, "bench harness", &phekit::Bench},
      {9, "NIST level mapping", &phekit::NistMapping},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!outcome.pass) ++failed;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n",
                outcome.pass ? "PASS" : "FAIL", c.number, c.name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
