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

#include <cstdint>

namespace ecsum {

// Scale caps. Every exhaustive routine checks its input against one of these
// and throws ScaleLimitExceeded instead of running away with memory or time.
struct Limits {
  // Largest field size for which points are enumerated.
  std::uint64_t max_enumeration_q = std::uint64_t{1} << 20;
  // Largest field size for which the full coordinate table is built.
  std::uint64_t max_structure_q = std::uint64_t{1} << 16;
  // Largest k for which NAF vectors are streamed into point sums.
  unsigned max_naf_points_k = 20;
  // Largest k for which NAF vectors are counted.
  unsigned max_naf_count_k = 30;
  // Pair-loop work budget (#S*#T + #U*#V) for solution counting.
  std::uint64_t max_sarkozy_pairs = 10'000'000'000ULL;
  // Support product budget for exact extractor convolution.
  std::uint64_t max_extractor_support = 100'000'000ULL;
};

inline constexpr Limits kDefaultLimits{};

}  // namespace ecsum
