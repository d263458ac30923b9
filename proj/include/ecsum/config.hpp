/*
 * Copyright 2026 The ecsum Authors.
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

// JSON documents describing curves:
//   {"field": {"kind": "prime", "p": 97},
//    "variant": "odd_weierstrass",
//    "coefficients": {"a2": 0, "a4": 1, "a6": 1}}
//   {"field": {"kind": "binary", "n": 5, "poly": 37},
//    "variant": "koblitz", "coefficients": {"a": 1}}
//   {"field": {"kind": "prime", "p": 11}, "variant": "glv"}
// "poly" is optional and defaults to the smallest irreducible of degree n.

#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "ecsum/curves.hpp"
#include "ecsum/error.hpp"
#include "ecsum/report.hpp"

namespace ecsum {

[[noreturn]] inline void config_error(const std::string& key, const std::string& what) {
  throw Error(ErrorKind::kConfigError, "config key '" + key + "': " + what);
}

inline void reject_unknown_keys(const Json& obj, const std::string& prefix,
                                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) config_error(prefix + key, "unknown key");
  }
}

inline std::int64_t json_int(const Json& obj, const std::string& key,
                             const std::string& prefix) {
  if (!obj.contains(key)) config_error(prefix + key, "missing");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) config_error(prefix + key, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::int64_t json_int_or(const Json& obj, const std::string& key,
                                const std::string& prefix, std::int64_t fallback) {
  return obj.contains(key) ? json_int(obj, key, prefix) : fallback;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfigError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kConfigError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

inline Field field_from_json(const Json& j, const std::string& prefix) {
  if (!j.is_object()) config_error(prefix, "expected an object");
  reject_unknown_keys(j, prefix + ".", {"kind", "p", "n", "poly"});
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    config_error(prefix + ".kind", "expected \"prime\" or \"binary\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "prime") {
      const std::int64_t p = json_int(j, "p", prefix + ".");
      if (p < 2) config_error(prefix + ".p", "must be a prime");
      return Field::prime(static_cast<std::uint64_t>(p));
    }
    if (kind == "binary") {
      const std::int64_t n = json_int(j, "n", prefix + ".");
      if (n < 1) config_error(prefix + ".n", "must be positive");
      if (j.contains("poly")) {
        const std::int64_t poly = json_int(j, "poly", prefix + ".");
        if (poly < 0) config_error(prefix + ".poly", "must be non-negative");
        return Field::binary(static_cast<unsigned>(n), static_cast<std::uint64_t>(poly));
      }
      return Field::binary(static_cast<unsigned>(n));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfigError) throw;
    config_error(prefix, e.what());
  }
  config_error(prefix + ".kind", "expected \"prime\" or \"binary\", got \"" + kind + "\"");
}

inline Curve curve_from_json(const Json& j, const std::string& prefix = "curve") {
  if (!j.is_object()) config_error(prefix, "expected an object");
  reject_unknown_keys(j, prefix + ".", {"field", "variant", "coefficients"});
  if (!j.contains("field")) config_error(prefix + ".field", "missing");
  const Field field = field_from_json(j.at("field"), prefix + ".field");
  const std::string variant =
      j.contains("variant") && j.at("variant").is_string()
          ? j.at("variant").get<std::string>()
          : (field.is_binary_field() ? "koblitz" : "odd_weierstrass");
  const Json coeffs = j.contains("coefficients") ? j.at("coefficients") : Json::object();
  const std::string cp = prefix + ".coefficients.";
  if (!coeffs.is_object()) config_error(prefix + ".coefficients", "expected an object");
  try {
    if (variant == "odd_weierstrass") {
      reject_unknown_keys(coeffs, cp, {"a2", "a4", "a6"});
      return Curve::weierstrass(field, field.from_int(json_int_or(coeffs, "a2", cp, 0)),
                                field.from_int(json_int(coeffs, "a4", cp)),
                                field.from_int(json_int(coeffs, "a6", cp)));
    }
    if (variant == "koblitz") {
      reject_unknown_keys(coeffs, cp, {"a"});
      const std::int64_t a = json_int_or(coeffs, "a", cp, 0);
      if (a != 0 && a != 1) config_error(cp + "a", "must be 0 or 1");
      return Curve::koblitz(field, static_cast<unsigned>(a));
    }
    if (variant == "glv") {
      reject_unknown_keys(coeffs, cp, {});
      if (!field.is_prime_field()) config_error(prefix + ".field", "GLV curve needs a prime field");
      return Curve::glv(field.characteristic());
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfigError) throw;
    config_error(prefix, e.what());
  }
  config_error(prefix + ".variant", "unknown variant \"" + variant + "\"");
}

inline Json curve_to_json(const Curve& curve) {
  const Field& f = curve.field();
  Json field = f.is_prime_field()
                   ? Json{{"kind", "prime"}, {"p", f.characteristic()}}
                   : Json{{"kind", "binary"}, {"n", f.degree()}, {"poly", f.reduction_poly()}};
  Json j;
  j["field"] = std::move(field);
  j["variant"] = std::string(to_string(curve.variant()));
  const CurveSpec& s = curve.spec();
  switch (curve.variant()) {
    case CurveVariant::kOddWeierstrass:
      j["coefficients"] = Json{{"a2", s.a2}, {"a4", s.a4}, {"a6", s.a6}};
      break;
    case CurveVariant::kKoblitz:
      j["coefficients"] = Json{{"a", s.koblitz_a}};
      break;
    case CurveVariant::kGlv:
      break;
  }
  return j;
}

}  // namespace ecsum
