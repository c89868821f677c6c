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
#include <vector>

#include "seqcrc/sample.hpp"

namespace seqcrc {

enum class LocalizationSetKind { kAdditive, kMultiplicative };
enum class ClassificationSetKind { kLac, kAps };

struct PredSetSpec {
  LocalizationSetKind localization = LocalizationSetKind::kAdditive;
  ClassificationSetKind classification = ClassificationSetKind::kLac;

  friend bool operator==(const PredSetSpec&, const PredSetSpec&) = default;
};

std::string_view to_string(LocalizationSetKind kind);
std::string_view to_string(ClassificationSetKind kind);
LocalizationSetKind parse_localization_set_kind(std::string_view name);
ClassificationSetKind parse_classification_set_kind(std::string_view name);

/// Class labels in ascending order.
using LabelSet = std::vector<ClassLabel>;

// Slack applied when comparing a confidence against 1 - lambda. The sweep
// produces lambda = 1 - c, and 1 - (1 - c) may land an ulp above c; without
// the slack the detection that defines the breakpoint would be dropped.
inline constexpr double kConfidenceSlack = 1e-12;

/// Whether a detection with `confidence` survives thresholding at 1 - lambda.
inline bool passes_confidence(double confidence, double lambda_cnf) {
  return confidence >= (1.0 - lambda_cnf) - kConfidenceSlack;
}

/// Number of leading detections (sorted by descending confidence) kept at
/// `lambda_cnf`.
std::size_t count_confident(std::span<const Detection> sorted_detections,
                            double lambda_cnf);

/// Indices of the detections with confidence >= 1 - lambda_cnf, in
/// descending-confidence order. Requires sorted detections.
std::vector<std::size_t> select_confident(const ImageSample& sample,
                                          double lambda_cnf);

/// Grows `box` by `lambda_loc` pixels on every side. Throws on negative input.
BoundingBox loc_set_additive(const BoundingBox& box, double lambda_loc);

/// Grows `box` by lambda_loc * width horizontally and lambda_loc * height
/// vertically on each side. Throws on negative input.
BoundingBox loc_set_multiplicative(const BoundingBox& box, double lambda_loc);

BoundingBox loc_set(LocalizationSetKind kind, const BoundingBox& box,
                    double lambda_loc);

/// Classes whose probability is at least 1 - lambda_cls.
LabelSet cls_set_lac(std::span<const double> probs, double lambda_cls);

/// Shortest prefix of the classes ranked by descending probability (ties by
/// ascending index) whose cumulative mass exceeds lambda_cls. lambda_cls >= 1
/// returns every class.
LabelSet cls_set_aps(std::span<const double> probs, double lambda_cls);

LabelSet cls_set(ClassificationSetKind kind, std::span<const double> probs,
                 double lambda_cls);

}  // namespace seqcrc
