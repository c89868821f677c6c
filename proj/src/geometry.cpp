// Copyright 2026 The SeqCRC Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqcrc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "seqcrc/errors.hpp"

namespace seqcrc {

std::ostream& operator<<(std::ostream& os, const BoundingBox& b) {
  return os << "(" << b.left << ", " << b.top << ", " << b.right << ", "
            << b.bottom << ")";
}

double area(const BoundingBox& b) {
  const double w = b.right - b.left;
  const double h = b.bottom - b.top;
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

BoundingBox intersect(const BoundingBox& a, const BoundingBox& b) {
  BoundingBox out{std::max(a.left, b.left), std::max(a.top, b.top),
                  std::min(a.right, b.right), std::min(a.bottom, b.bottom)};
  if (out.left > out.right || out.top > out.bottom) return BoundingBox{};
  return out;
}

BoundingBox expand(const BoundingBox& b, double dx, double dy) {
  return {b.left - dx, b.top - dy, b.right + dx, b.bottom + dy};
}

BoundingBox hull(const BoundingBox& a, const BoundingBox& b) {
  return {std::min(a.left, b.left), std::min(a.top, b.top),
          std::max(a.right, b.right), std::max(a.bottom, b.bottom)};
}

bool contains(const BoundingBox& outer, const BoundingBox& inner) {
  return inner.left >= outer.left && inner.top >= outer.top &&
         inner.right <= outer.right && inner.bottom <= outer.bottom;
}

double hausdorff_distance(const BoundingBox& gt, const BoundingBox& pred) {
  double d = std::max({pred.left - gt.left, pred.top - gt.top,
                       gt.right - pred.right, gt.bottom - pred.bottom});
  if (!std::isfinite(d)) return d;
  // The subtractions above can round below the margin expand() needs; step up
  // until growing pred by d really contains gt. A handful of ulps at most.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 64 && !contains(expand(pred, d, d), gt); ++i) {
    d = std::nextafter(d, kInf);
  }
  return d;
}

double giou_distance(const BoundingBox& a, const BoundingBox& b) {
  const double area_a = area(a);
  const double area_b = area(b);
  if (area_a <= 0.0 || area_b <= 0.0) {
    throw DegenerateBoxError("giou_distance: zero-area box");
  }
  const double inter = area(intersect(a, b));
  const double uni = area_a + area_b - inter;
  const double enclosing = area(hull(a, b));
  return 1.0 - inter / uni + (enclosing - uni) / enclosing;
}

}  // namespace seqcrc
