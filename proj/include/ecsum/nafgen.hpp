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

// Signed-digit vectors without adjacent nonzero digits (the set M_k), the
// points sum_j mu_j sigma^j(P) they generate, and exponential sums over them.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecsum/bounds.hpp"
#include "ecsum/curves.hpp"
#include "ecsum/endos.hpp"
#include "ecsum/error.hpp"
#include "ecsum/limits.hpp"
#include "ecsum/report.hpp"
#include "ecsum/sums.hpp"

namespace ecsum {

// Digits mu_0, ..., mu_{k-1} in {-1, 0, 1}.
struct NafVector {
  std::vector<std::int8_t> digits;

  std::size_t size() const { return digits.size(); }
  bool valid() const {
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (digits[j] < -1 || digits[j] > 1) return false;
      if (j + 1 < digits.size() && digits[j] != 0 && digits[j + 1] != 0) {
        return false;
      }
    }
    return true;
  }
  friend bool operator==(const NafVector&, const NafVector&) = default;
  friend auto operator<=>(const NafVector&, const NafVector&) = default;
};

// #M_k from c_k = c_{k-1} + 2 c_{k-2}, c_0 = 1, c_1 = 3.
inline std::uint64_t count_naf_vectors(unsigned k) {
  if (k > 62) throw Error(ErrorKind::kScaleLimitExceeded, "k must be <= 62");
  std::uint64_t prev = 1, cur = 3;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    const std::uint64_t next = cur + 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Streams every vector of M_k in lexicographic order (digit order -1 < 0 < 1).
template <typename Fn>
void for_each_naf(unsigned k, Fn&& fn) {
  std::vector<std::int8_t> digits(k, 0);
  auto rec = [&](auto&& self, unsigned j, bool prev_nonzero) -> void {
    if (j == k) {
      fn(std::span<const std::int8_t>(digits));
      return;
    }
    for (std::int8_t d : {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}}) {
      if (d != 0 && prev_nonzero) continue;
      digits[j] = d;
      self(self, j + 1, d != 0);
    }
    digits[j] = 0;
  };
  rec(rec, 0, false);
}

inline std::vector<NafVector> enumerate_naf_vectors(
    unsigned k, const Limits& limits = kDefaultLimits) {
  if (k > limits.max_naf_points_k) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "materialized enumeration limited to k <= " +
                    std::to_string(limits.max_naf_points_k));
  }
  std::vector<NafVector> out;
  out.reserve(count_naf_vectors(k));
  for_each_naf(k, [&](std::span<const std::int8_t> d) {
    out.push_back(NafVector{{d.begin(), d.end()}});
  });
  return out;
}

// sigma^j(P) for j < k, with the number of GLV pole hits seen on the way.
struct EndoPowers {
  std::vector<Point> powers;
  std::uint64_t pole_hits = 0;
};

inline EndoPowers endo_powers(const Endomorphism& sigma, const Point& p,
                              unsigned k) {
  sigma.curve().require_on_curve(p);
  EndoPowers out;
  out.powers.reserve(k);
  Point cur = p;
  for (unsigned j = 0; j < k; ++j) {
    out.powers.push_back(cur);
    if (j + 1 < k) {
      if (sigma.at_pole(cur)) ++out.pole_hits;
      cur = sigma.apply(cur);
    }
  }
  return out;
}

// P_{sigma,m} = sum_j mu_j sigma^j(P).
inline Point point_from_vector(const Endomorphism& sigma, const Point& p,
                               const NafVector& m) {
  if (!m.valid()) {
    throw Error(ErrorKind::kParameterError, "vector has adjacent nonzero digits");
  }
  const Curve& curve = sigma.curve();
  const auto powers = endo_powers(sigma, p, static_cast<unsigned>(m.size()));
  Point acc = Point::infinity();
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.digits[j] == 1) acc = curve.add(acc, powers.powers[j]);
    if (m.digits[j] == -1) acc = curve.sub(acc, powers.powers[j]);
  }
  return acc;
}

// Visits P_{sigma,m} for every m in M_k, in the order of for_each_naf, adding
// one point per tree node.
template <typename Fn>
void for_each_naf_point(const Curve& curve, const std::vector<Point>& powers,
                        Fn&& fn) {
  const unsigned k = static_cast<unsigned>(powers.size());
  std::vector<Point> neg(k);
  for (unsigned j = 0; j < k; ++j) neg[j] = curve.neg(powers[j]);
  auto rec = [&](auto&& self, unsigned j, bool prev_nonzero,
                 const Point& acc) -> void {
    if (j == k) {
      fn(acc);
      return;
    }
    if (!prev_nonzero) self(self, j + 1, true, curve.add(acc, neg[j]));
    self(self, j + 1, false, acc);
    if (!prev_nonzero) self(self, j + 1, true, curve.add(acc, powers[j]));
  };
  rec(rec, 0, false, Point::infinity());
}

inline void check_naf_k(unsigned k, const Limits& limits) {
  if (k > limits.max_naf_points_k) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "point sweeps limited to k <= " +
                    std::to_string(limits.max_naf_points_k));
  }
}

// N_{sigma,k}(Q) for every attained Q, in canonical point order.
inline std::vector<std::pair<Point, std::uint64_t>> collision_counts(
    const Endomorphism& sigma, const Point& p, unsigned k,
    const Limits& limits = kDefaultLimits) {
  check_naf_k(k, limits);
  const auto powers = endo_powers(sigma, p, k);
  std::unordered_map<std::uint64_t, std::pair<Point, std::uint64_t>> counts;
  for_each_naf_point(sigma.curve(), powers.powers, [&](const Point& q) {
    auto [it, inserted] = counts.try_emplace(q.key(), q, 0);
    ++it->second.second;
  });
  std::vector<std::pair<Point, std::uint64_t>> out;
  out.reserve(counts.size());
  for (auto& [key, entry] : counts) out.push_back(entry);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// S_{sigma,k} = sum_{m in M_k} psi(x(P_{sigma,m})).
inline SumReport naf_sum(const Endomorphism& sigma, const Point& p, unsigned k,
                         const AdditiveCharacter& psi,
                         const Limits& limits = kDefaultLimits) {
  check_naf_k(k, limits);
  const Curve& curve = sigma.curve();
  require_same_field(curve, psi);
  const auto powers = endo_powers(sigma, p, k);
  Complex acc{};
  for_each_naf_point(curve, powers.powers,
                     [&](const Point& q) { acc += psi_of_x(psi, q); });

  const std::uint64_t group_order = count_points(curve, limits);
  const std::uint64_t ell = point_order(curve, p, group_order);
  const double q = static_cast<double>(curve.field().size());
  const double naf_count = static_cast<double>(count_naf_vectors(k));

  SumReport report;
  report.kind = "naf";
  report.set_value(acc);
  report.params["q"] = curve.field().size();
  report.params["endo"] = std::string(to_string(sigma.kind()));
  report.params["P"] = to_string(p);
  report.params["k"] = k;
  report.params["ell"] = ell;
  report.params["ell_prime"] = is_prime(ell);
  report.params["naf_count"] = count_naf_vectors(k);
  report.params["pole_hits"] = powers.pole_hits;
  report.params["psi"] = psi.index();
  BoundParams bp;
  bp.q = q;
  bp.naf_count = naf_count;
  bp.ell = static_cast<double>(ell);
  bp.k = static_cast<double>(k);
  report.add_bound(std::string(to_string(BoundKind::kNafBilinear)),
                   bound_eval(BoundKind::kNafBilinear, bp));
  if (k >= 1) {
    // nu must satisfy nu >= log q / (2 k log 2).
    const int nu_min = std::max(
        1, static_cast<int>(std::ceil(std::log(q) / (2.0 * k * std::log(2.0)))));
    report.add_bound(std::string(to_string(BoundKind::kNafPrior)),
                     bound_eval_min_nu(BoundKind::kNafPrior, bp, nu_min,
                                       std::max(4, nu_min)));
  }
  report.add_bound("trivial", naf_count);
  if (!is_prime(ell)) report.warnings.push_back("order of P is not prime");
  if (!is_ordinary(curve, group_order)) {
    report.warnings.push_back("curve is not ordinary");
  }
  return report;
}

// S_{sigma,k} recomputed as R_0 + R_1 from the split at r = ceil(k/2):
// U_0 / U_1 are the vectors of M_r ending in 0 / +-1, V_0 = M_{k-r} and
// V_1 = {(0, w) : w in M_{k-r-1}}, and
//   R_j = sum_{u in U_j} sum_{v in V_j} psi(x(P_u + sigma^r(P_v))),
// evaluated as a weighted bilinear sum over the distinct points.
struct NafSplit {
  Complex value;
  Complex r0;
  Complex r1;
  unsigned r = 0;
  std::uint64_t u0 = 0, u1 = 0, v0 = 0, v1 = 0;
};

inline NafSplit naf_sum_split(const Endomorphism& sigma, const Point& p,
                              unsigned k, const AdditiveCharacter& psi,
                              const Limits& limits = kDefaultLimits) {
  if (k < 2) throw Error(ErrorKind::kParameterError, "split needs k >= 2");
  check_naf_k(k, limits);
  const Curve& curve = sigma.curve();
  require_same_field(curve, psi);
  const unsigned r = (k + 1) / 2;
  const auto powers = endo_powers(sigma, p, k).powers;

  using Counts = std::unordered_map<std::uint64_t, std::pair<Point, double>>;
  auto bump = [](Counts& c, const Point& q) {
    auto [it, inserted] = c.try_emplace(q.key(), q, 0.0);
    it->second.second += 1.0;
  };
  auto to_set = [&](const Counts& c) {
    std::vector<std::pair<Point, Complex>> entries;
    entries.reserve(c.size());
    for (const auto& [key, e] : c) entries.emplace_back(e.first, e.second);
    return WeightedPointSet(curve, std::move(entries));
  };

  NafSplit out;
  out.r = r;

  // X_0 / X_1 with multiplicities.
  Counts x0, x1;
  {
    const std::vector<Point> head(powers.begin(), powers.begin() + r);
    std::vector<std::int8_t> last;
    for_each_naf(r, [&](std::span<const std::int8_t> d) {
      last.push_back(d[r - 1]);
    });
    std::size_t idx = 0;
    for_each_naf_point(curve, head, [&](const Point& q) {
      if (last[idx++] == 0) {
        bump(x0, q);
        ++out.u0;
      } else {
        bump(x1, q);
        ++out.u1;
      }
    });
  }

  // Y_0 / Y_1: sigma^r applied to the points of the tail vectors.
  auto shift = [&](Point q) {
    for (unsigned i = 0; i < r; ++i) q = sigma.apply(q);
    return q;
  };
  Counts y0, y1;
  {
    const std::vector<Point> tail(powers.begin(), powers.begin() + (k - r));
    for_each_naf_point(curve, tail, [&](const Point& q) {
      bump(y0, shift(q));
      ++out.v0;
    });
  }
  {
    // (0, w): the leading zero digit keeps w's digits in positions 1..k-r-1.
    const unsigned len = k - r - 1;
    std::vector<Point> tail;
    for (unsigned j = 0; j < len; ++j) tail.push_back(powers[j + 1]);
    for_each_naf_point(curve, tail, [&](const Point& q) {
      bump(y1, shift(q));
      ++out.v1;
    });
  }

  out.r0 = bilinear_add_value(to_set(x0), to_set(y0), psi);
  out.r1 = bilinear_add_value(to_set(x1), to_set(y1), psi);
  out.value = out.r0 + out.r1;
  return out;
}

}  // namespace ecsum
