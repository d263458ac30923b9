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

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace ecsum {

using Json = nlohmann::ordered_json;

struct BoundValue {
  std::string name;
  double value = 0.0;
  double ratio = 0.0;  // |sum| / value
};

// Value of one sum together with the envelopes it is measured against.
struct SumReport {
  std::string kind;
  std::complex<double> value;
  double abs = 0.0;
  Json params = Json::object();
  std::vector<BoundValue> bounds;
  std::vector<std::string> warnings;

  void set_value(std::complex<double> v) {
    value = v;
    abs = std::abs(v);
  }

  void add_bound(std::string name, double bound) {
    const double ratio = bound > 0.0 ? abs / bound : INFINITY;
    bounds.push_back(BoundValue{std::move(name), bound, ratio});
  }

  const BoundValue* find_bound(const std::string& name) const {
    for (const auto& b : bounds) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }

  double ratio(const std::string& name) const {
    const BoundValue* b = find_bound(name);
    return b ? b->ratio : NAN;
  }

  Json to_json() const {
    Json j;
    j["kind"] = kind;
    j["sum_re"] = value.real();
    j["sum_im"] = value.imag();
    j["abs"] = abs;
    j["params"] = params;
    Json arr = Json::array();
    for (const auto& b : bounds) {
      arr.push_back(Json{{"name", b.name}, {"value", b.value}, {"ratio", b.ratio}});
    }
    j["bounds"] = std::move(arr);
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
  }
};

}  // namespace ecsum
