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

// Closed-form envelopes for the sums in sums.hpp, nafgen.hpp and
// combinat.hpp. Every formula is returned with implied constant 1; the
// constants themselves are what the sweeps measure.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "ecsum/error.hpp"

namespace ecsum {

enum class BoundKind {
  // sqrt(q): single sums over a cyclic subgroup twisted by a group character.
  kSingleSum,
  // (#A)^{1-1/2v} (#B)^{1-1/(v+2)} T^{(v+1)/v(v+2)} q^{1/4(v+2)} (log q)^{1/(v+2)}.
  kBilinearMultiplicative,
  // (#P)^{1-1/2v} (#Q)^{1/2} q^{1/2v} + (#P)^{1-1/2v} #Q q^{1/4v}.
  kBilinearAdditivePrior,
  // sqrt(q R T) with R, T the squared weight norms.
  kBilinearAdditive,
  // min(q #R, (#R)^2 #S q^{-1/2}); lower bound for #U #V.
  kSumProductPrior,
  // min(q #R, (#R #S)^2 / q); lower bound for #U #V.
  kSumProduct,
  // n^2 sqrt(q).
  kStationaryGeneral,
  // q^{3/2} / d.
  kStationaryLargeD,
  // q d^{-1/2} + q^{3/4}.
  kStationarySmallD,
  // q d^{-1/2}.
  kStationaryTorsion,
  // #M_k (q^{1/4v} l^{-1/2v} + 2^{-k/2v} q^{(v+1)/4v^2}).
  kNafPrior,
  // #M_k sqrt(q) / l + sqrt(#M_k q).
  kNafBilinear,
  // N^{1-(3v+2)/2v(v+3)} t^{(v+1)/v(v+3)} q^{1/4(v+3)}.
  kPowerGenShortPrior,
  // T^{1-(3v+2)/2v(v+2)} t^{(v+1)/v(v+2)} q^{1/4(v+2)} log q.
  kPowerGenLongPrior,
  // N^{1-(3v+2)/2v(v+2)} t^{(v+1)/v(v+2)} q^{1/4(v+2)} (log q)^{1/(v+2)}.
  kPowerGenInductive,
};

inline std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kSingleSum: return "single_sum";
    case BoundKind::kBilinearMultiplicative: return "bilinear_multiplicative";
    case BoundKind::kBilinearAdditivePrior: return "bilinear_additive_prior";
    case BoundKind::kBilinearAdditive: return "bilinear_additive";
    case BoundKind::kSumProductPrior: return "sum_product_prior";
    case BoundKind::kSumProduct: return "sum_product";
    case BoundKind::kStationaryGeneral: return "stationary_general";
    case BoundKind::kStationaryLargeD: return "stationary_large_d";
    case BoundKind::kStationarySmallD: return "stationary_small_d";
    case BoundKind::kStationaryTorsion: return "stationary_torsion";
    case BoundKind::kNafPrior: return "naf_prior";
    case BoundKind::kNafBilinear: return "naf_bilinear";
    case BoundKind::kPowerGenShortPrior: return "powgen_short_prior";
    case BoundKind::kPowerGenLongPrior: return "powgen_long_prior";
    case BoundKind::kPowerGenInductive: return "powgen_inductive";
  }
  return "unknown";
}

// Inputs for bound_eval. Only the fields a formula reads need to be set.
struct BoundParams {
  std::optional<double> q;
  std::optional<int> nu;
  std::optional<double> size_a;    // #A, #P, #R
  std::optional<double> size_b;    // #B, #Q, #S
  std::optional<double> order_T;   // order of G (multiplicative bilinear)
  std::optional<double> weight_r;  // sum |rho|^2
  std::optional<double> weight_t;  // sum |theta|^2
  std::optional<double> n;
  std::optional<double> d;
  std::optional<double> naf_count;  // #M_k
  std::optional<double> k;
  std::optional<double> ell;
  std::optional<double> t;       // order of G (power generator)
  std::optional<double> length;  // N
  std::optional<double> period;  // T = ord_t(e)
};

namespace detail {

inline double need(const std::optional<double>& v, const char* name) {
  if (!v) {
    throw Error(ErrorKind::kParameterError,
                std::string("missing bound parameter '") + name + "'");
  }
  return *v;
}

inline double need_nu(const BoundParams& p) {
  if (!p.nu) throw Error(ErrorKind::kParameterError, "missing bound parameter 'nu'");
  if (*p.nu < 1) {
    throw Error(ErrorKind::kParameterError, "nu must be an integer >= 1");
  }
  return static_cast<double>(*p.nu);
}

}  // namespace detail

inline double bound_eval(BoundKind kind, const BoundParams& p) {
  using detail::need;
  using std::log;
  using std::pow;
  using std::sqrt;
  switch (kind) {
    case BoundKind::kSingleSum:
      return sqrt(need(p.q, "q"));
    case BoundKind::kBilinearMultiplicative: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      return pow(need(p.size_a, "size_a"), 1.0 - 1.0 / (2.0 * v)) *
             pow(need(p.size_b, "size_b"), 1.0 - 1.0 / (v + 2.0)) *
             pow(need(p.order_T, "order_T"), (v + 1.0) / (v * (v + 2.0))) *
             pow(q, 1.0 / (4.0 * (v + 2.0))) * pow(log(q), 1.0 / (v + 2.0));
    }
    case BoundKind::kBilinearAdditivePrior: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      const double a = pow(need(p.size_a, "size_a"), 1.0 - 1.0 / (2.0 * v));
      const double b = need(p.size_b, "size_b");
      return a * sqrt(b) * pow(q, 1.0 / (2.0 * v)) +
             a * b * pow(q, 1.0 / (4.0 * v));
    }
    case BoundKind::kBilinearAdditive:
      return sqrt(need(p.q, "q") * need(p.weight_r, "weight_r") *
                  need(p.weight_t, "weight_t"));
    case BoundKind::kSumProductPrior: {
      const double q = need(p.q, "q");
      const double r = need(p.size_a, "size_a");
      const double s = need(p.size_b, "size_b");
      return std::min(q * r, r * r * s / sqrt(q));
    }
    case BoundKind::kSumProduct: {
      const double q = need(p.q, "q");
      const double r = need(p.size_a, "size_a");
      const double s = need(p.size_b, "size_b");
      return std::min(q * r, (r * s) * (r * s) / q);
    }
    case BoundKind::kStationaryGeneral: {
      const double n = need(p.n, "n");
      return n * n * sqrt(need(p.q, "q"));
    }
    case BoundKind::kStationaryLargeD:
      return pow(need(p.q, "q"), 1.5) / need(p.d, "d");
    case BoundKind::kStationarySmallD: {
      const double q = need(p.q, "q");
      return q / sqrt(need(p.d, "d")) + pow(q, 0.75);
    }
    case BoundKind::kStationaryTorsion:
      return need(p.q, "q") / sqrt(need(p.d, "d"));
    case BoundKind::kNafPrior: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      return need(p.naf_count, "naf_count") *
             (pow(q, 1.0 / (4.0 * v)) * pow(need(p.ell, "ell"), -1.0 / (2.0 * v)) +
              pow(2.0, -need(p.k, "k") / (2.0 * v)) *
                  pow(q, (v + 1.0) / (4.0 * v * v)));
    }
    case BoundKind::kNafBilinear: {
      const double q = need(p.q, "q");
      const double m = need(p.naf_count, "naf_count");
      return m * sqrt(q) / need(p.ell, "ell") + sqrt(m * q);
    }
    case BoundKind::kPowerGenShortPrior: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      return pow(need(p.length, "length"),
                 1.0 - (3.0 * v + 2.0) / (2.0 * v * (v + 3.0))) *
             pow(need(p.t, "t"), (v + 1.0) / (v * (v + 3.0))) *
             pow(q, 1.0 / (4.0 * (v + 3.0)));
    }
    case BoundKind::kPowerGenLongPrior: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      return pow(need(p.period, "period"),
                 1.0 - (3.0 * v + 2.0) / (2.0 * v * (v + 2.0))) *
             pow(need(p.t, "t"), (v + 1.0) / (v * (v + 2.0))) *
             pow(q, 1.0 / (4.0 * (v + 2.0))) * log(q);
    }
    case BoundKind::kPowerGenInductive: {
      const double v = detail::need_nu(p);
      const double q = need(p.q, "q");
      return pow(need(p.length, "length"),
                 1.0 - (3.0 * v + 2.0) / (2.0 * v * (v + 2.0))) *
             pow(need(p.t, "t"), (v + 1.0) / (v * (v + 2.0))) *
             pow(q, 1.0 / (4.0 * (v + 2.0))) * pow(log(q), 1.0 / (v + 2.0));
    }
  }
  throw Error(ErrorKind::kParameterError, "unknown bound kind");
}

// Minimum of a nu-dependent bound over nu in [nu_min, nu_max].
inline double bound_eval_min_nu(BoundKind kind, BoundParams p, int nu_min = 1,
                                int nu_max = 4) {
  double best = std::numeric_limits<double>::infinity();
  for (int v = nu_min; v <= nu_max; ++v) {
    p.nu = v;
    best = std::min(best, bound_eval(kind, p));
  }
  return best;
}

}  // namespace ecsum
