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

#include "seqcrc/sample.hpp"

#include <algorithm>
#include <utility>

namespace seqcrc {

void sort_detections(std::vector<Detection>& detections) {
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.confidence > b.confidence;
                   });
}

ImageSample make_image_sample(std::string image_id,
                              std::vector<GroundTruth> ground_truths,
                              std::vector<Detection> detections,
                              double prefilter_threshold) {
  std::erase_if(detections, [&](const Detection& d) {
    return d.confidence < prefilter_threshold;
  });
  sort_detections(detections);
  ImageSample sample;
  sample.image_id = std::move(image_id);
  sample.ground_truths = std::move(ground_truths);
  sample.detections = std::move(detections);
  return sample;
}

}  // namespace seqcrc
