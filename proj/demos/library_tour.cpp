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

// A short tour of the library on y^2 = x^3 + 2x + 3 over F_1009.

#include <iostream>

#include "ecsum.hpp"

int main() {
  using namespace ecsum;
  const Curve curve = Curve::short_weierstrass(Field::prime(1009), 2, 3);
  const auto structure = group_structure(curve);
  std::cout << curve.describe() << "\n"
            << "  #E = " << structure->order() << " = " << structure->m() << " x " << structure->l()
            << ", P1 = " << to_string(structure->p1()) << "\n";

  const AdditiveCharacter psi(curve.field(), 1);
  const GroupCharacter chi(structure, 1, 0);
  const SumReport single = single_sum(structure->p1(), psi, chi);
  std::cout << "  single sum |S| = " << single.abs << ", ratio to sqrt(q) = "
            << single.ratio("single_sum") << "\n";

  const SumReport stationary = stationary_sum(curve, 3, 1, 1, psi);
  std::cout << "  stationary n = 3: |S| = " << stationary.abs << "\n";

  const Endomorphism doubling = Endomorphism::doubling(curve);
  const SumReport naf = naf_sum(doubling, structure->p1(), 12, psi);
  std::cout << "  NAF sum k = 12 over " << naf.params["naf_count"] << " vectors: |S| = " << naf.abs << "\n";

  Rng rng(7);
  const auto points = enumerate_points(curve);
  const PointSetQuad quad{PointSet(curve, rng.sample(points, 650)), PointSet(curve, rng.sample(points, 650)),
                          PointSet(curve, rng.sample(points, 650)), PointSet(curve, rng.sample(points, 650))};
  const SarkozyReport sarkozy = sarkozy_asymptotic_report(quad);
  std::cout << "  x(S) + x(T) = x(U + V): " << sarkozy.count << " solutions, main term "
            << sarkozy.main_term << "\n";

  const PointSource source = PointSource::uniform(curve, points);
  const BitDistribution bits = output_distribution(source, source, 2);
  std::cout << "  two extracted bits: statistical distance " << statistical_distance_to_uniform(bits) << "\n";
}
