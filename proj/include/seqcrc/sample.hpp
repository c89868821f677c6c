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

#include <string>
#include <vector>

#include "seqcrc/geometry.hpp"

namespace seqcrc {

using ClassLabel = int;
using ProbabilityVector = std::vector<double>;

struct GroundTruth {
  BoundingBox box;
  ClassLabel label = 0;

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

/// One post-NMS detection: a box, a softmax vector over the K classes, and an
/// objectness/confidence score in [0, 1].
struct Detection {
  BoundingBox box;
  ProbabilityVector probs;
  double confidence = 0.0;

  friend bool operator==(const Detection&, const Detection&) = default;
};

/// Ground truths and detections of one image. Detections are kept sorted by
/// descending confidence, which makes every confidence-filtered selection a
/// prefix of `detections`.
struct ImageSample {
  std::string image_id;
  double width = 0.0;   // 0 when unknown
  double height = 0.0;  // 0 when unknown
  std::vector<GroundTruth> ground_truths;
  std::vector<Detection> detections;

  friend bool operator==(const ImageSample&, const ImageSample&) = default;
};

/// Stable-sorts detections by descending confidence.
void sort_detections(std::vector<Detection>& detections);

/// Builds a sample, dropping detections below `prefilter_threshold` and
/// sorting the remainder.
ImageSample make_image_sample(std::string image_id,
                              std::vector<GroundTruth> ground_truths,
                              std::vector<Detection> detections,
                              double prefilter_threshold = 0.0);

}  // namespace seqcrc
