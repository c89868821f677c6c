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

#include <cstddef>
#include <span>
#include <string_view>

#include "seqcrc/matching.hpp"
#include "seqcrc/predsets.hpp"
#include "seqcrc/sample.hpp"

namespace seqcrc {

// Every loss below is [0, 1]-valued. The two image-level edge rules apply to
// all of them: no ground truth gives 0, and (for localization and
// classification) ground truth with an empty selection gives 1.

enum class ConfidenceLossKind { kBoxCountThreshold, kBoxCountRecall };
enum class LocalizationLossKind { kThresholded, kBoxwise, kPixelwise };
enum class Aggregation { kAverage, kMax, kThresholded };

struct LossSpec {
  ConfidenceLossKind confidence = ConfidenceLossKind::kBoxCountThreshold;
  LocalizationLossKind localization = LocalizationLossKind::kBoxwise;
  double localization_tau = 1.0;  // covered fraction required by kThresholded
  Aggregation classification = Aggregation::kAverage;
  double aggregation_tau = 0.0;  // Aggregation::kThresholded fails when mean > tau

  friend bool operator==(const LossSpec&, const LossSpec&) = default;
};

std::string_view to_string(ConfidenceLossKind kind);
std::string_view to_string(LocalizationLossKind kind);
std::string_view to_string(Aggregation kind);
ConfidenceLossKind parse_confidence_loss_kind(std::string_view name);
LocalizationLossKind parse_localization_loss_kind(std::string_view name);
Aggregation parse_aggregation(std::string_view name);

/// Average, max, or thresholded average (1 when the average exceeds tau) of
/// per-object losses. Empty input aggregates to 0.
double aggregate(std::span<const double> values, Aggregation kind,
                 double tau = 0.0);

/// box-count-threshold: 1 unless at least |y| predictions are kept.
/// box-count-recall: (|y| - selected)_+ / |y|.
double conf_loss(std::size_t num_ground_truths, std::size_t selected_count,
                 ConfidenceLossKind kind);
double conf_loss(const ImageSample& sample, std::size_t selected_count,
                 ConfidenceLossKind kind);

/// `margined_boxes` is aligned with the selected prediction list the matching
/// refers to.
double loc_loss(std::span<const GroundTruth> gts,
                const MatchingAssignment& matching,
                std::span<const BoundingBox> margined_boxes,
                LocalizationLossKind kind, double tau = 1.0);
double loc_loss(const ImageSample& sample, const MatchingAssignment& matching,
                std::span<const BoundingBox> margined_boxes,
                LocalizationLossKind kind, double tau = 1.0);

/// Per-object miss indicators 1{c_j not in set at pi(j)}, aggregated.
/// `class_sets` is aligned with the selected prediction list; entries no ground
/// truth is matched to are never read.
double cls_loss(std::span<const GroundTruth> gts,
                const MatchingAssignment& matching,
                std::span<const LabelSet> class_sets, Aggregation aggregation,
                double tau = 0.0);
double cls_loss(const ImageSample& sample, const MatchingAssignment& matching,
                std::span<const LabelSet> class_sets, Aggregation aggregation,
                double tau = 0.0);

}  // namespace seqcrc
