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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecsum/curves.hpp"
#include "ecsum/error.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/report.hpp"

namespace ecsum {

// A probability distribution on the points of one curve.
class PointSource {
 public:
  PointSource(Curve curve, std::vector<std::pair<Point, double>> entries)
      : curve_(std::move(curve)) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double total = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& [p, w] = entries[i];
      curve_.require_on_curve(p);
      if (!(w >= 0.0)) {
        throw Error(ErrorKind::kParameterError, "negative probability");
      }
      if (i > 0 && entries[i - 1].first == p) {
        throw Error(ErrorKind::kParameterError, "duplicate point " + to_string(p));
      }
      total += w;
      peak = std::max(peak, w);
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw Error(ErrorKind::kParameterError,
                  "probabilities sum to " + std::to_string(total));
    }
    std::erase_if(entries, [](const auto& e) { return e.second == 0.0; });
    entries_ = std::move(entries);
    min_entropy_ = -std::log2(peak);
  }

  static PointSource uniform(Curve curve, std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw Error(ErrorKind::kParameterError, "empty source");
    const double w = 1.0 / static_cast<double>(points.size());
    std::vector<std::pair<Point, double>> entries;
    for (const Point& p : points) entries.emplace_back(p, w);
    return PointSource(std::move(curve), std::move(entries), 0);
  }

  static PointSource point_mass(Curve curve, const Point& p) {
    return PointSource(std::move(curve), {{p, 1.0}});
  }

  // The source of P + r.
  PointSource translate(const Point& r) const {
    curve_.require_on_curve(r);
    std::vector<std::pair<Point, double>> out;
    out.reserve(entries_.size());
    for (const auto& [p, w] : entries_) out.emplace_back(curve_.add(p, r), w);
    return PointSource(curve_, std::move(out), 0);
  }

  const Curve& curve() const { return curve_; }
  const std::vector<std::pair<Point, double>>& entries() const { return entries_; }
  std::size_t support() const { return entries_.size(); }
  double min_entropy() const { return min_entropy_; }

 private:
  // Trusted constructor for already normalized, duplicate-free entries.
  PointSource(Curve curve, std::vector<std::pair<Point, double>> entries, int)
      : curve_(std::move(curve)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double peak = 0.0;
    for (const auto& e : entries_) peak = std::max(peak, e.second);
    min_entropy_ = -std::log2(peak);
  }

  Curve curve_;
  std::vector<std::pair<Point, double>> entries_;
  double min_entropy_ = 0.0;
};

inline void require_prime_field(const Curve& curve) {
  if (curve.field().kind() != FieldKind::kPrime) {
    throw Error(ErrorKind::kUnsupportedField,
                "bit extraction needs a prime field");
  }
}

// floor(x * 2^m / p).
inline std::uint64_t top_bits(Elem x, std::uint64_t p, unsigned m) {
  return (static_cast<std::uint64_t>(x) << m) / p;
}

// The m most significant bits of x(P + Q) as a '0'/'1' string.
inline std::string extract_bits(const Curve& curve, const Point& p,
                                const Point& q, unsigned m) {
  require_prime_field(curve);
  if (m > 32) throw Error(ErrorKind::kParameterError, "m must be <= 32");
  const Point r = curve.checked_add(p, q);
  if (r.is_infinity()) {
    throw Error(ErrorKind::kSampleRejected, "P + Q is the point at infinity");
  }
  const std::uint64_t v = top_bits(r.x(), curve.field().size(), m);
  std::string out(m, '0');
  for (unsigned i = 0; i < m; ++i) {
    if ((v >> (m - 1 - i)) & 1) out[i] = '1';
  }
  return out;
}

// Output histogram over {0,1}^m. Masses are fixed-point integers so that
// coarsening is exact; probability(i) = mass[i] / total.
struct BitDistribution {
  unsigned m = 0;
  std::vector<std::uint64_t> mass;
  std::uint64_t total = 0;
  double rejected = 0.0;  // probability that P + Q = O

  double probability(std::size_t i) const {
    return static_cast<double>(mass[i]) / static_cast<double>(total);
  }
  std::vector<double> probabilities() const {
    std::vector<double> out(mass.size());
    for (std::size_t i = 0; i < mass.size(); ++i) out[i] = probability(i);
    return out;
  }
};

// Scale of the fixed-point masses (2^60).
inline constexpr double kMassScale = 1152921504606846976.0;

inline BitDistribution output_distribution(const PointSource& src_p,
                                           const PointSource& src_q, unsigned m,
                                           const Limits& limits = kDefaultLimits) {
  if (!(src_p.curve() == src_q.curve())) {
    throw Error(ErrorKind::kCurveMismatch, "sources live on different curves");
  }
  const Curve& curve = src_p.curve();
  require_prime_field(curve);
  if (m > 24) throw Error(ErrorKind::kParameterError, "m must be <= 24");
  const double pairs = static_cast<double>(src_p.support()) * src_q.support();
  if (pairs > limits.max_extractor_support) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "product of support sizes exceeds the configured budget");
  }
  const std::uint64_t p = curve.field().size();
  std::vector<double> by_x(p, 0.0);
  double accepted = 0.0;
  double rejected = 0.0;
  for (const auto& [a, wa] : src_p.entries()) {
    for (const auto& [b, wb] : src_q.entries()) {
      const Point r = curve.add(a, b);
      if (r.is_infinity()) {
        rejected += wa * wb;
      } else {
        by_x[r.x()] += wa * wb;
        accepted += wa * wb;
      }
    }
  }
  if (!(accepted > 0.0)) {
    throw Error(ErrorKind::kSampleRejected, "every sample pair sums to O");
  }
  BitDistribution dist;
  dist.m = m;
  dist.mass.assign(std::size_t{1} << m, 0);
  dist.rejected = rejected;
  for (Elem x = 0; x < p; ++x) {
    if (by_x[x] == 0.0) continue;
    const auto w = static_cast<std::uint64_t>(std::llround(by_x[x] / accepted * kMassScale));
    dist.mass[top_bits(x, p, m)] += w;
    dist.total += w;
  }
  return dist;
}

// Merges buckets 2i and 2i + 1, i.e. drops the last output bit.
inline BitDistribution coarsen(const BitDistribution& d) {
  if (d.m == 0) throw Error(ErrorKind::kParameterError, "cannot coarsen m = 0");
  BitDistribution out;
  out.m = d.m - 1;
  out.total = d.total;
  out.rejected = d.rejected;
  out.mass.assign(std::size_t{1} << out.m, 0);
  for (std::size_t i = 0; i < d.mass.size(); ++i) out.mass[i >> 1] += d.mass[i];
  return out;
}

inline double statistical_distance_to_uniform(const BitDistribution& d) {
  const double u = std::ldexp(1.0, -static_cast<int>(d.m));
  double acc = 0.0;
  for (std::size_t i = 0; i < d.mass.size(); ++i) acc += std::abs(d.probability(i) - u);
  return 0.5 * acc;
}

inline Json extractor_report(const PointSource& src_p, const PointSource& src_q,
                             unsigned m, const Limits& limits = kDefaultLimits) {
  const BitDistribution d = output_distribution(src_p, src_q, m, limits);
  Json j;
  j["kind"] = "extract";
  j["m"] = m;
  j["sd"] = statistical_distance_to_uniform(d);
  j["min_entropies"] = Json::array({src_p.min_entropy(), src_q.min_entropy()});
  j["supports"] = Json::array({src_p.support(), src_q.support()});
  j["rejected"] = d.rejected;
  j["distribution"] = d.probabilities();
  return j;
}

}  // namespace ecsum
