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
#include <string_view>

#include "ecsum/curves.hpp"
#include "ecsum/error.hpp"

namespace ecsum {

enum class EndoKind { kDoubling, kFrobenius, kGlv };

inline std::string_view to_string(EndoKind kind) {
  switch (kind) {
    case EndoKind::kDoubling: return "doubling";
    case EndoKind::kFrobenius: return "frobenius";
    case EndoKind::kGlv: return "glv";
  }
  return "unknown";
}

// One of: doubling P -> 2P (any curve), Frobenius (x, y) -> (x^2, y^2)
// (Koblitz curves), or the norm-2 map of the GLV curve
//   (x, y) -> ((x^2 - b) / (b^2 (x - c)), y (x^2 - 2cx + b) / (b^3 (x - c)^2)),
// whose pole x = c is sent to O.
class Endomorphism {
 public:
  Endomorphism(EndoKind kind, Curve curve) : kind_(kind), curve_(std::move(curve)) {
    if (kind == EndoKind::kFrobenius && curve_.variant() != CurveVariant::kKoblitz) {
      throw Error(ErrorKind::kEndoMismatch,
                  "Frobenius map needs a Koblitz curve, got " + curve_.describe());
    }
    if (kind == EndoKind::kGlv && curve_.variant() != CurveVariant::kGlv) {
      throw Error(ErrorKind::kEndoMismatch,
                  "GLV map needs the GLV curve, got " + curve_.describe());
    }
  }

  static Endomorphism doubling(Curve curve) {
    return Endomorphism(EndoKind::kDoubling, std::move(curve));
  }
  static Endomorphism frobenius(Curve curve) {
    return Endomorphism(EndoKind::kFrobenius, std::move(curve));
  }
  static Endomorphism glv(Curve curve) {
    return Endomorphism(EndoKind::kGlv, std::move(curve));
  }

  EndoKind kind() const { return kind_; }
  const Curve& curve() const { return curve_; }

  // True for the affine point where the GLV formula has its pole.
  bool at_pole(const Point& p) const {
    return kind_ == EndoKind::kGlv && !p.is_infinity() &&
           p.x() == curve_.spec().glv_c;
  }

  Point apply(const Point& p) const {
    if (p.is_infinity()) return p;
    const Field& f = curve_.field();
    switch (kind_) {
      case EndoKind::kDoubling:
        return curve_.dbl(p);
      case EndoKind::kFrobenius:
        return Point::affine(f.sqr(p.x()), f.sqr(p.y()));
      case EndoKind::kGlv: {
        if (at_pole(p)) return Point::infinity();
        const Elem b = curve_.spec().glv_b;
        const Elem c = curve_.spec().glv_c;
        const Elem x = p.x();
        const Elem xc = f.sub(x, c);
        const Elem b2 = f.sqr(b);
        const Elem x_num = f.sub(f.sqr(x), b);
        const Elem x_new = f.div(x_num, f.mul(b2, xc));
        const Elem y_num =
            f.mul(p.y(), f.add(f.sub(f.sqr(x), f.mul(f.add(c, c), x)), b));
        const Elem y_new = f.div(y_num, f.mul(f.mul(b2, b), f.sqr(xc)));
        return Point::affine(x_new, y_new);
      }
    }
    return p;
  }

  // Checked application: throws CurveMismatch for points off the curve.
  Point operator()(const Point& p) const {
    curve_.require_on_curve(p);
    return apply(p);
  }

  // sigma^j(P), sigma^0 the identity.
  Point iterate(std::uint64_t j, Point p) const {
    curve_.require_on_curve(p);
    if (kind_ == EndoKind::kDoubling && j < 63) {
      return curve_.mul_unsigned(std::uint64_t{1} << j, p);
    }
    for (std::uint64_t i = 0; i < j; ++i) p = apply(p);
    return p;
  }

 private:
  EndoKind kind_;
  Curve curve_;
};

}  // namespace ecsum
