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

#include "seqcrc/losses.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcrc {

std::string_view to_string(ConfidenceLossKind kind) {
  return kind == ConfidenceLossKind::kBoxCountThreshold ? "box_count_threshold"
                                                        : "box_count_recall";
}

std::string_view to_string(LocalizationLossKind kind) {
  switch (kind) {
    case LocalizationLossKind::kThresholded: return "thresholded";
    case LocalizationLossKind::kBoxwise: return "boxwise";
    case LocalizationLossKind::kPixelwise: return "pixelwise";
  }
  return "unknown";
}

std::string_view to_string(Aggregation kind) {
  switch (kind) {
    case Aggregation::kAverage: return "average";
    case Aggregation::kMax: return "max";
    case Aggregation::kThresholded: return "thresholded";
  }
  return "unknown";
}

ConfidenceLossKind parse_confidence_loss_kind(std::string_view name) {
  if (name == "box_count_threshold") return ConfidenceLossKind::kBoxCountThreshold;
  if (name == "box_count_recall") return ConfidenceLossKind::kBoxCountRecall;
  throw std::invalid_argument("unknown confidence loss: " + std::string(name));
}

LocalizationLossKind parse_localization_loss_kind(std::string_view name) {
  if (name == "thresholded") return LocalizationLossKind::kThresholded;
  if (name == "boxwise") return LocalizationLossKind::kBoxwise;
  if (name == "pixelwise") return LocalizationLossKind::kPixelwise;
  throw std::invalid_argument("unknown localization loss: " + std::string(name));
}

Aggregation parse_aggregation(std::string_view name) {
  if (name == "average") return Aggregation::kAverage;
  if (name == "max") return Aggregation::kMax;
  if (name == "thresholded") return Aggregation::kThresholded;
  throw std::invalid_argument("unknown aggregation: " + std::string(name));
}

double aggregate(std::span<const double> values, Aggregation kind, double tau) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  switch (kind) {
    case Aggregation::kAverage: return mean;
    case Aggregation::kMax: return *std::max_element(values.begin(), values.end());
    case Aggregation::kThresholded: return mean > tau ? 1.0 : 0.0;
  }
  throw std::logic_error("unhandled Aggregation");
}

double conf_loss(std::size_t num_ground_truths, std::size_t selected_count,
                 ConfidenceLossKind kind) {
  if (num_ground_truths == 0) return 0.0;
  if (selected_count >= num_ground_truths) return 0.0;
  if (kind == ConfidenceLossKind::kBoxCountThreshold) return 1.0;
  return static_cast<double>(num_ground_truths - selected_count) /
         static_cast<double>(num_ground_truths);
}

double conf_loss(const ImageSample& sample, std::size_t selected_count,
                 ConfidenceLossKind kind) {
  return conf_loss(sample.ground_truths.size(), selected_count, kind);
}

double loc_loss(std::span<const GroundTruth> gts,
                const MatchingAssignment& matching,
                std::span<const BoundingBox> margined_boxes,
                LocalizationLossKind kind, double tau) {
  if (gts.empty()) return 0.0;
  if (margined_boxes.empty()) return 1.0;
  if (matching.size() != gts.size()) {
    throw std::invalid_argument("loc_loss: matching size differs from ground truth count");
  }
  const double n = static_cast<double>(gts.size());

  if (kind == LocalizationLossKind::kPixelwise) {
    double covered = 0.0;
    for (std::size_t j = 0; j < gts.size(); ++j) {
      const BoundingBox& gt = gts[j].box;
      const BoundingBox& pred = margined_boxes[matching[j].value()];
      const double gt_area = area(gt);
      // A zero-area ground truth counts as covered iff it sits inside the box.
      covered += gt_area > 0.0 ? area(intersect(gt, pred)) / gt_area
                               : (contains(pred, gt) ? 1.0 : 0.0);
    }
    return std::clamp(1.0 - covered / n, 0.0, 1.0);
  }

  std::size_t hits = 0;
  for (std::size_t j = 0; j < gts.size(); ++j) {
    if (contains(margined_boxes[matching[j].value()], gts[j].box)) ++hits;
  }
  const double fraction = static_cast<double>(hits) / n;
  if (kind == LocalizationLossKind::kThresholded) {
    return fraction >= tau ? 0.0 : 1.0;
  }
  return 1.0 - fraction;
}

double loc_loss(const ImageSample& sample, const MatchingAssignment& matching,
                std::span<const BoundingBox> margined_boxes,
                LocalizationLossKind kind, double tau) {
  return loc_loss(sample.ground_truths, matching, margined_boxes, kind, tau);
}

double cls_loss(std::span<const GroundTruth> gts,
                const MatchingAssignment& matching,
                std::span<const LabelSet> class_sets, Aggregation aggregation,
                double tau) {
  if (gts.empty()) return 0.0;
  if (class_sets.empty()) return 1.0;
  if (matching.size() != gts.size()) {
    throw std::invalid_argument("cls_loss: matching size differs from ground truth count");
  }
  std::vector<double> misses(gts.size());
  for (std::size_t j = 0; j < gts.size(); ++j) {
    const LabelSet& set = class_sets[matching[j].value()];
    misses[j] = std::binary_search(set.begin(), set.end(), gts[j].label) ? 0.0 : 1.0;
  }
  return aggregate(misses, aggregation, tau);
}

double cls_loss(const ImageSample& sample, const MatchingAssignment& matching,
                std::span<const LabelSet> class_sets, Aggregation aggregation,
                double tau) {
  return cls_loss(sample.ground_truths, matching, class_sets, aggregation, tau);
}

}  // namespace seqcrc
