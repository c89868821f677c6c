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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seqcrc/sample.hpp"

namespace seqcrc {

enum class MatchKind { kHausdorff, kLac, kGiou, kMix };

struct MatchDistanceSpec {
  MatchKind kind = MatchKind::kMix;
  double tau = 0.25;  // weight of the classification term; read only by kMix

  friend bool operator==(const MatchDistanceSpec&,
                         const MatchDistanceSpec&) = default;
};

std::string_view to_string(MatchKind kind);
/// Throws std::invalid_argument on unknown names.
MatchKind parse_match_kind(std::string_view name);

/// Ground truth index -> index into the selected prediction list, or nullopt
/// when nothing is selected. Several ground truths may share a prediction.
using MatchingAssignment = std::vector<std::optional<std::size_t>>;

/// 1 - probs[true_class]. Throws std::invalid_argument when the label is out
/// of range.
double lac_distance(ClassLabel true_class, std::span<const double> probs);

/// tau * lac + (1 - tau) * hausdorff, with the pixel-valued Hausdorff term left
/// unnormalized.
double mix_distance(const GroundTruth& gt, const Detection& pred, double tau);

/// Distance between a ground truth and a prediction under `spec`.
double match_distance(const GroundTruth& gt, const Detection& pred,
                      const MatchDistanceSpec& spec);

/// Assigns every ground truth to its nearest prediction; ties go to the lowest
/// prediction index.
MatchingAssignment match(std::span<const GroundTruth> gts,
                         std::span<const Detection> preds,
                         const MatchDistanceSpec& spec);

}  // namespace seqcrc
