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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <sodium.h>

#include "json.hpp"
#include "phekit/algebra.h"
#include "phekit/ec.h"
#include "phekit/errors.h"

namespace phekit {

namespace {

using nlohmann::json;

struct ComponentNames {
  std::vector<std::string_view> public_names;
  std::vector<std::string_view> private_names;
};

ComponentNames ComponentsOf(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRsa:
      return {{"e", "n"}, {"d", "p", "q"}};
    case Algorithm::kGoldwasserMicali:
      return {{"n", "x"}, {"p", "q"}};
    case Algorithm::kElGamal:
    case Algorithm::kExpElGamal:
      return {{"g", "h", "p", "q"}, {"x"}};
    case Algorithm::kBenaloh:
      return {{"n", "y"}, {"p", "phi", "q", "x"}};
    case Algorithm::kEcElGamal:
      return {{"qx", "qy"}, {"x"}};
    case Algorithm::kNaccacheStern:
      return {{"g", "n", "sigma"}, {"p", "phi", "q"}};
    case Algorithm::kOkamotoUchiyama:
      return {{"g", "h", "n"}, {"p", "q"}};
    case Algorithm::kPaillier:
      return {{"g", "n"}, {"lambda", "mu", "p", "q"}};
    case Algorithm::kDamgardJurik:
      return {{"g", "n"}, {"d", "lambda", "p", "q"}};
  }
  return {};
}

json ParseJson(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json& Field(const json& object, std::string_view name,
                  std::string_view path) {
  if (!object.is_object()) {
    throw ParseError("field '" + std::string(path) + "' must be an object");
  }
  auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError("missing field '" + std::string(path) +
                     (path.empty() ? "" : ".") + std::string(name) + "'");
  }
  return *it;
}

std::string FieldPath(std::string_view parent, std::string_view name) {
  return parent.empty() ? std::string(name)
                        : std::string(parent) + "." + std::string(name);
}

Natural NaturalField(const json& value, const std::string& path) {
  if (!value.is_string()) {
    throw ParseError("field '" + path + "' must be a decimal string");
  }
  return ParseDecimal(value.get<std::string>(), path);
}

std::uint64_t CountField(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    throw ParseError("field '" + path + "' must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::string StringField(const json& value, const std::string& path) {
  if (!value.is_string()) {
    throw ParseError("field '" + path + "' must be a string");
  }
  return value.get<std::string>();
}

void RejectUnknown(const json& object, const std::vector<std::string_view>& allowed,
                   std::string_view path) {
  for (const auto& [name, unused] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == name;
    if (!known) {
      throw ParseError("unexpected field '" + FieldPath(path, name) + "'");
    }
  }
}

json ComponentsToJson(const NamedValues& values) {
  json out = json::object();
  for (const auto& [name, value] : values) out[name] = ToDecimal(value);
  return out;
}

NamedValues ComponentsFromJson(const json& object,
                               const std::vector<std::string_view>& names,
                               std::string_view path) {
  if (!object.is_object()) {
    throw ParseError("field '" + std::string(path) + "' must be an object");
  }
  RejectUnknown(object, names, path);
  NamedValues out;
  for (auto name : names) {
    const std::string full = FieldPath(path, name);
    auto it = object.find(name);
    if (it == object.end()) throw ParseError("missing field '" + full + "'");
    out.emplace(std::string(name), NaturalField(*it, full));
  }
  return out;
}

json ParamsToJson(Algorithm algorithm, const SchemeParams& params) {
  json out = json::object();
  switch (algorithm) {
    case Algorithm::kDamgardJurik:
      out["s"] = params.damgard_jurik_s;
      break;
    case Algorithm::kBenaloh:
      out["block_size"] = params.benaloh_block_size;
      break;
    case Algorithm::kNaccacheStern:
      out["prime_count"] = params.naccache_prime_count;
      break;
    case Algorithm::kEcElGamal:
      out["curve"] = params.curve;
      out["dlp_bound"] = params.dlp_bound;
      break;
    case Algorithm::kExpElGamal:
      out["dlp_bound"] = params.dlp_bound;
      break;
    default:
      break;
  }
  return out;
}

SchemeParams ParamsFromJson(Algorithm algorithm, const json& object) {
  if (!object.is_object()) throw ParseError("field 'params' must be an object");
  SchemeParams params;
  auto unsigned_field = [&](std::string_view name) {
    const std::string path = FieldPath("params", name);
    const std::uint64_t v = CountField(Field(object, name, "params"), path);
    if (v == 0 || v > 0xffffffffu) {
      throw ParseError("field '" + path + "' is out of range");
    }
    return static_cast<unsigned>(v);
  };
  auto bound_field = [&](std::string_view name) {
    const std::string path = FieldPath("params", name);
    const std::uint64_t v = CountField(Field(object, name, "params"), path);
    if (v < 2) throw ParseError("field '" + path + "' must be at least 2");
    return v;
  };
  switch (algorithm) {
    case Algorithm::kDamgardJurik:
      RejectUnknown(object, {"s"}, "params");
      params.damgard_jurik_s = unsigned_field("s");
      break;
    case Algorithm::kBenaloh:
      RejectUnknown(object, {"block_size"}, "params");
      params.benaloh_block_size = bound_field("block_size");
      break;
    case Algorithm::kNaccacheStern:
      RejectUnknown(object, {"prime_count"}, "params");
      params.naccache_prime_count = unsigned_field("prime_count");
      break;
    case Algorithm::kEcElGamal: {
      RejectUnknown(object, {"curve", "dlp_bound"}, "params");
      params.curve =
          StringField(Field(object, "curve", "params"), "params.curve");
      try {
        ec::GetCurve(params.curve);
      } catch (const LookupError& e) {
        throw ParseError(std::string("field 'params.curve': ") + e.what());
      }
      params.dlp_bound = bound_field("dlp_bound");
      break;
    }
    case Algorithm::kExpElGamal:
      RejectUnknown(object, {"dlp_bound"}, "params");
      params.dlp_bound = bound_field("dlp_bound");
      break;
    default:
      RejectUnknown(object, {}, "params");
      break;
  }
  return params;
}

Algorithm AlgorithmField(const json& document) {
  const std::string id =
      StringField(Field(document, "algorithm", ""), "algorithm");
  try {
    return ParseAlgorithm(id);
  } catch (const LookupError& e) {
    throw ParseError(std::string("field 'algorithm': ") + e.what());
  }
}

void CheckVersion(const json& document) {
  const std::uint64_t version =
      CountField(Field(document, "format_version", ""), "format_version");
  if (version != static_cast<std::uint64_t>(kFormatVersion)) {
    throw ParseError("unsupported format_version " + std::to_string(version) +
                     " (expected " + std::to_string(kFormatVersion) + ")");
  }
}

json PointToJson(const ec::CurvePoint& point) {
  if (point.is_identity()) return json{{"identity", true}};
  return json{{"x", ToDecimal(point.x())}, {"y", ToDecimal(point.y())}};
}

ec::CurvePoint PointFromJson(const json& value, const std::string& path) {
  if (!value.is_object()) {
    throw ParseError("field '" + path + "' must be an object");
  }
  if (value.contains("identity")) {
    RejectUnknown(value, {"identity"}, path);
    if (value["identity"] != true) {
      throw ParseError("field '" + path + ".identity' must be true");
    }
    return ec::CurvePoint::Identity();
  }
  RejectUnknown(value, {"x", "y"}, path);
  return ec::CurvePoint(NaturalField(Field(value, "x", path), path + ".x"),
                        NaturalField(Field(value, "y", path), path + ".y"));
}

json PayloadToJson(const Payload& payload) {
  json out = json::object();
  out["type"] = std::string(PayloadKindName(KindOf(payload)));
  if (const auto* single = std::get_if<Natural>(&payload)) {
    out["value"] = ToDecimal(*single);
  } else if (const auto* pair = std::get_if<NaturalPair>(&payload)) {
    out["first"] = ToDecimal(pair->first);
    out["second"] = ToDecimal(pair->second);
  } else if (const auto* bits = std::get_if<BitCiphertexts>(&payload)) {
    json values = json::array();
    for (const auto& v : *bits) values.push_back(ToDecimal(v));
    out["values"] = std::move(values);
  } else {
    const auto& points = std::get<PointPair>(payload);
    out["first"] = PointToJson(points.first);
    out["second"] = PointToJson(points.second);
  }
  return out;
}

Payload PayloadFromJson(const json& value, Algorithm algorithm) {
  if (!value.is_object()) throw ParseError("field 'payload' must be an object");
  const std::string type =
      StringField(Field(value, "type", "payload"), "payload.type");
  const PayloadKind expected = ExpectedPayloadKind(algorithm);
  if (type != PayloadKindName(expected)) {
    throw ParseError("field 'payload.type' is '" + type + "' but " +
                     std::string(AlgorithmId(algorithm)) + " ciphertexts are '" +
                     std::string(PayloadKindName(expected)) + "'");
  }
  switch (expected) {
    case PayloadKind::kSingle:
      RejectUnknown(value, {"type", "value"}, "payload");
      return NaturalField(Field(value, "value", "payload"), "payload.value");
    case PayloadKind::kPair:
      RejectUnknown(value, {"type", "first", "second"}, "payload");
      return NaturalPair{
          NaturalField(Field(value, "first", "payload"), "payload.first"),
          NaturalField(Field(value, "second", "payload"), "payload.second")};
    case PayloadKind::kBits: {
      RejectUnknown(value, {"type", "values"}, "payload");
      const json& values = Field(value, "values", "payload");
      if (!values.is_array() || values.empty()) {
        throw ParseError("field 'payload.values' must be a non-empty array");
      }
      BitCiphertexts bits;
      for (std::size_t i = 0; i < values.size(); ++i) {
        bits.push_back(NaturalField(
            values[i], "payload.values[" + std::to_string(i) + "]"));
      }
      return bits;
    }
    case PayloadKind::kPointPair:
      RejectUnknown(value, {"type", "first", "second"}, "payload");
      return PointPair{
          PointFromJson(Field(value, "first", "payload"), "payload.first"),
          PointFromJson(Field(value, "second", "payload"), "payload.second")};
  }
  throw ParseError("field 'payload' has an unknown layout");
}

std::string Dump(const json& document) { return document.dump(2) + "\n"; }

}  // namespace

std::string SerializeKey(const KeyPair& keys) {
  json document = json::object();
  document["algorithm"] = std::string(AlgorithmId(keys.algorithm));
  document["format_version"] = kFormatVersion;
  document["params"] = ParamsToJson(keys.algorithm, keys.params);
  document["public"] = ComponentsToJson(keys.public_key);
  if (keys.private_key) document["private"] = ComponentsToJson(*keys.private_key);
  document["security_bits"] = keys.security_bits;
  return Dump(document);
}

KeyPair ParseKey(std::string_view text) {
  const json document = ParseJson(text, "key file");
  if (!document.is_object()) throw ParseError("key file must be a JSON object");
  RejectUnknown(document,
                {"algorithm", "format_version", "params", "private", "public",
                 "security_bits"},
                "");
  CheckVersion(document);
  KeyPair keys;
  keys.algorithm = AlgorithmField(document);
  const ComponentNames names = ComponentsOf(keys.algorithm);
  const std::uint64_t bits =
      CountField(Field(document, "security_bits", ""), "security_bits");
  if (bits == 0 || bits > 1u << 20) {
    throw ParseError("field 'security_bits' is out of range");
  }
  keys.security_bits = static_cast<unsigned>(bits);
  keys.params = ParamsFromJson(keys.algorithm, Field(document, "params", ""));
  keys.public_key = ComponentsFromJson(Field(document, "public", ""),
                                       names.public_names, "public");
  if (auto it = document.find("private"); it != document.end()) {
    keys.private_key =
        ComponentsFromJson(*it, names.private_names, "private");
  }
  if (keys.algorithm == Algorithm::kEcElGamal) {
    const ec::CurvePoint q(keys.Public("qx"), keys.Public("qy"));
    if (!ec::IsOnCurve(q, ec::GetCurve(keys.params.curve))) {
      throw ParseError("field 'public' is not a point on curve " +
                       keys.params.curve);
    }
  }
  return keys;
}

std::string KeyFingerprint(const KeyPair& keys) {
  const std::string document = SerializeKey(keys.PublicOnly());
  std::array<unsigned char, crypto_hash_sha256_BYTES> digest;
  crypto_hash_sha256(digest.data(),
                     reinterpret_cast<const unsigned char*>(document.data()),
                     document.size());
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (unsigned char byte : digest) {
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 0xf]);
  }
  return out;
}

std::string SerializeCiphertext(const Ciphertext& c) {
  json document = json::object();
  document["algorithm"] = std::string(AlgorithmId(c.algorithm));
  document["format_version"] = kFormatVersion;
  document["key_fingerprint"] = c.key_fingerprint;
  document["payload"] = PayloadToJson(c.payload);
  document["scale_denominator"] = ToDecimal(c.scale_denominator);
  return Dump(document);
}

Ciphertext ParseCiphertext(std::string_view text) {
  const json document = ParseJson(text, "ciphertext file");
  if (!document.is_object()) {
    throw ParseError("ciphertext file must be a JSON object");
  }
  RejectUnknown(document,
                {"algorithm", "format_version", "key_fingerprint", "payload",
                 "scale_denominator"},
                "");
  CheckVersion(document);
  Ciphertext c;
  c.algorithm = AlgorithmField(document);
  c.key_fingerprint = StringField(Field(document, "key_fingerprint", ""),
                                  "key_fingerprint");
  c.payload = PayloadFromJson(Field(document, "payload", ""), c.algorithm);
  c.scale_denominator = NaturalField(Field(document, "scale_denominator", ""),
                                     "scale_denominator");
  if (c.scale_denominator == 0) {
    throw ParseError("field 'scale_denominator' must be positive");
  }
  return c;
}

}  // namespace phekit
