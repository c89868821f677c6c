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

#pragma once

#include <iosfwd>

namespace seqcrc {

/// Axis-aligned box in pixel coordinates, stored as its top-left and
/// bottom-right corners. Margined boxes may extend past the image or take
/// negative coordinates; nothing here clamps.
struct BoundingBox {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;

  double width() const { return right - left; }
  double height() const { return bottom - top; }

  /// True when left <= right and top <= bottom.
  bool is_valid() const { return left <= right && top <= bottom; }

  static BoundingBox from_xywh(double x, double y, double w, double h) {
    return {x, y, x + w, y + h};
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

std::ostream& operator<<(std::ostream& os, const BoundingBox& b);

/// (right - left) * (bottom - top), or 0 when either extent is negative.
double area(const BoundingBox& b);

/// Component-wise intersection. Disjoint inputs yield the canonical empty box
/// (0, 0, 0, 0).
BoundingBox intersect(const BoundingBox& a, const BoundingBox& b);

/// Grows the box by `dx` on the left and right and `dy` on the top and bottom.
BoundingBox expand(const BoundingBox& b, double dx, double dy);

/// Smallest box enclosing both inputs.
BoundingBox hull(const BoundingBox& a, const BoundingBox& b);

/// Non-strict inclusion: every edge of `inner` lies within `outer`.
bool contains(const BoundingBox& outer, const BoundingBox& inner);

/// Asymmetric signed Hausdorff distance from a ground truth to a prediction:
/// the smallest additive margin m such that `pred` grown by m on every side
/// contains `gt`. Negative when the prediction already strictly contains it.
/// Rounded up by a few ulps where needed so that
/// contains(expand(pred, d, d), gt) always holds for the returned d.
double hausdorff_distance(const BoundingBox& gt, const BoundingBox& pred);

/// 1 - IoU + (hull area not covered by the union) / hull area, in [0, 2].
/// Throws DegenerateBoxError if either box has zero area.
double giou_distance(const BoundingBox& a, const BoundingBox& b);

}  // namespace seqcrc
