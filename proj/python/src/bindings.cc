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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "phekit/algebra.h"
#include "phekit/capability.h"
#include "phekit/errors.h"

namespace py = pybind11;

namespace phekit {
namespace {

// Python ints cross the boundary as decimal text; GMP and CPython share no
// cheaper common representation.
py::int_ ToPython(const Natural& value) {
  return py::int_(py::str(ToDecimal(value)));
}

Natural FromPython(const py::int_& value) {
  return ParseDecimal(py::str(value).cast<std::string>(), "integer");
}

// Key pair plus the randomness used for encryption and regeneration.
class Session {
 public:
  Session(KeyPair keys, std::optional<std::uint64_t> seed)
      : keys_(std::move(keys)), rng_(MakeRandom(seed)) {}

  static Session Generate(const std::string& algorithm, unsigned key_size,
                          const std::string& curve, std::optional<unsigned> s,
                          std::optional<std::uint64_t> dlp_bound,
                          std::optional<std::uint64_t> block_size,
                          std::optional<unsigned> prime_count,
                          std::optional<std::uint64_t> seed) {
    SchemeParams params;
    params.curve = curve;
    if (s) params.damgard_jurik_s = *s;
    if (dlp_bound) params.dlp_bound = *dlp_bound;
    if (block_size) params.benaloh_block_size = *block_size;
    if (prime_count) params.naccache_prime_count = *prime_count;
    RandomSource rng = MakeRandom(seed);
    KeyPair keys = GenerateKeys(ParseAlgorithm(algorithm), key_size, params, rng);
    return Session(std::move(keys), std::move(rng));
  }

  std::string algorithm() const {
    return std::string(AlgorithmId(keys_.algorithm));
  }
  unsigned security_bits() const { return keys_.security_bits; }
  bool has_private() const { return keys_.has_private(); }
  std::string fingerprint() const { return KeyFingerprint(keys_); }
  std::string ExportKeys(bool include_private) const {
    return SerializeKey(include_private ? keys_ : keys_.PublicOnly());
  }

  py::object PlaintextBound() const {
    auto bound = phekit::PlaintextBound(keys_);
    return bound ? py::object(ToPython(*bound)) : py::object(py::none());
  }

  Ciphertext Encrypt(const py::int_& m, std::optional<unsigned> bit_width) {
    return EncryptValue(keys_, FromPython(m), rng_, bit_width);
  }
  py::tuple DecryptScaled(const Ciphertext& c) const {
    const mpq_class value = phekit::DecryptScaled(keys_, c);
    return py::make_tuple(ToPython(value.get_num()), ToPython(value.get_den()));
  }
  Ciphertext Add(const Ciphertext& a, const Ciphertext& b) const {
    return CipherAdd(a, b, keys_);
  }
  Ciphertext Multiply(const Ciphertext& a, const Ciphertext& b) const {
    return CipherMultiply(a, b, keys_);
  }
  Ciphertext Xor(const Ciphertext& a, const Ciphertext& b) const {
    return CipherXor(a, b, keys_);
  }
  Ciphertext Scalar(const Ciphertext& c, const std::string& k) const {
    return CipherScalar(RationalScalar::Parse(k), c, keys_);
  }
  Ciphertext Regenerate(const Ciphertext& c) {
    return CipherRegenerate(c, keys_, rng_);
  }

 private:
  Session(KeyPair keys, RandomSource rng)
      : keys_(std::move(keys)), rng_(std::move(rng)) {}

  static RandomSource MakeRandom(std::optional<std::uint64_t> seed) {
    return seed ? RandomSource(*seed) : RandomSource::FromEnvironment();
  }

  KeyPair keys_;
  RandomSource rng_;
};

}  // namespace
}  // namespace phekit

PYBIND11_MODULE(_core, m) {
  using namespace phekit;
  m.doc() = "Partially homomorphic encryption primitives";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<CapabilityError>(m, "CapabilityError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<OperandMismatchError>(m, "OperandMismatchError",
                                               error);
  py::register_exception<PlaintextRangeError>(m, "PlaintextRangeError", error);

  m.def("algorithms", [] {
    py::list out;
    for (Algorithm a : kAllAlgorithms) out.append(std::string(AlgorithmId(a)));
    return out;
  });
  m.def("capabilities", [](const std::string& algorithm) {
    const Capability caps = Capabilities(ParseAlgorithm(algorithm));
    py::dict out;
    out["mul"] = caps.hom_mul;
    out["add"] = caps.hom_add;
    out["scalar"] = caps.scalar_mul;
    out["xor"] = caps.hom_xor;
    out["regen"] = caps.regeneration;
    return out;
  });

  py::class_<Ciphertext>(m, "Ciphertext")
      .def_property_readonly(
          "algorithm",
          [](const Ciphertext& c) { return std::string(AlgorithmId(c.algorithm)); })
      .def_property_readonly("scale_denominator",
                             [](const Ciphertext& c) {
                               return ToPython(c.scale_denominator);
                             })
      .def_readonly("key_fingerprint", &Ciphertext::key_fingerprint)
      .def("to_json", &SerializeCiphertext)
      .def_static("from_json",
                  [](const std::string& text) { return ParseCiphertext(text); })
      .def("__eq__", [](const Ciphertext& a, const Ciphertext& b) {
        return a == b;
      });

  py::class_<Session>(m, "Session")
      .def_static("generate", &Session::Generate, py::arg("algorithm"),
                  py::arg("key_size"), py::arg("curve") = "",
                  py::arg("s") = py::none(), py::arg("dlp_bound") = py::none(),
                  py::arg("block_size") = py::none(),
                  py::arg("prime_count") = py::none(),
                  py::arg("seed") = py::none())
      .def_static(
          "from_json",
          [](const std::string& text, std::optional<std::uint64_t> seed) {
            return Session(ParseKey(text), seed);
          },
          py::arg("text"), py::arg("seed") = py::none())
      .def_property_readonly("algorithm", &Session::algorithm)
      .def_property_readonly("security_bits", &Session::security_bits)
      .def_property_readonly("has_private", &Session::has_private)
      .def_property_readonly("fingerprint", &Session::fingerprint)
      .def_property_readonly("plaintext_bound", &Session::PlaintextBound)
      .def("export_keys", &Session::ExportKeys,
           py::arg("include_private") = true)
      .def("encrypt", &Session::Encrypt, py::arg("m"),
           py::arg("bit_width") = py::none())
      .def("decrypt_scaled", &Session::DecryptScaled)
      .def("add", &Session::Add)
      .def("multiply", &Session::Multiply)
      .def("xor", &Session::Xor)
      .def("scalar", &Session::Scalar)
      .def("regenerate", &Session::Regenerate);
}
