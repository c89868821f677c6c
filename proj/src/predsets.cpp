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

#include "seqcrc/predsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seqcrc {

std::string_view to_string(LocalizationSetKind kind) {
  return kind == LocalizationSetKind::kAdditive ? "additive" : "multiplicative";
}

std::string_view to_string(ClassificationSetKind kind) {
  return kind == ClassificationSetKind::kLac ? "lac" : "aps";
}

LocalizationSetKind parse_localization_set_kind(std::string_view name) {
  if (name == "additive") return LocalizationSetKind::kAdditive;
  if (name == "multiplicative") return LocalizationSetKind::kMultiplicative;
  throw std::invalid_argument("unknown localization set: " + std::string(name));
}

ClassificationSetKind parse_classification_set_kind(std::string_view name) {
  if (name == "lac") return ClassificationSetKind::kLac;
  if (name == "aps") return ClassificationSetKind::kAps;
  throw std::invalid_argument("unknown classification set: " +
                              std::string(name));
}

std::size_t count_confident(std::span<const Detection> sorted_detections,
                            double lambda_cnf) {
  const auto it = std::partition_point(
      sorted_detections.begin(), sorted_detections.end(),
      [&](const Detection& d) { return passes_confidence(d.confidence, lambda_cnf); });
  return static_cast<std::size_t>(it - sorted_detections.begin());
}

std::vector<std::size_t> select_confident(const ImageSample& sample,
                                          double lambda_cnf) {
  std::vector<std::size_t> out(count_confident(sample.detections, lambda_cnf));
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

namespace {

void require_margin(double lambda_loc) {
  if (!(lambda_loc >= 0.0)) {
    throw std::invalid_argument("localization margin must be non-negative, got " +
                                std::to_string(lambda_loc));
  }
}

}  // namespace

BoundingBox loc_set_additive(const BoundingBox& box, double lambda_loc) {
  require_margin(lambda_loc);
  return expand(box, lambda_loc, lambda_loc);
}

BoundingBox loc_set_multiplicative(const BoundingBox& box, double lambda_loc) {
  require_margin(lambda_loc);
  return expand(box, lambda_loc * box.width(), lambda_loc * box.height());
}

BoundingBox loc_set(LocalizationSetKind kind, const BoundingBox& box,
                    double lambda_loc) {
  return kind == LocalizationSetKind::kAdditive
             ? loc_set_additive(box, lambda_loc)
             : loc_set_multiplicative(box, lambda_loc);
}

LabelSet cls_set_lac(std::span<const double> probs, double lambda_cls) {
  LabelSet out;
  const double threshold = 1.0 - lambda_cls;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] >= threshold) out.push_back(static_cast<ClassLabel>(k));
  }
  return out;
}

LabelSet cls_set_aps(std::span<const double> probs, double lambda_cls) {
  LabelSet out(probs.size());
  std::iota(out.begin(), out.end(), ClassLabel{0});
  if (lambda_cls >= 1.0) return out;

  std::stable_sort(out.begin(), out.end(), [&](ClassLabel a, ClassLabel b) {
    return probs[static_cast<std::size_t>(a)] > probs[static_cast<std::size_t>(b)];
  });
  double mass = 0.0;
  std::size_t keep = out.size();  // no prefix exceeds lambda: keep everything
  for (std::size_t m = 0; m < out.size(); ++m) {
    mass += probs[static_cast<std::size_t>(out[m])];
    if (mass > lambda_cls) {
      keep = m + 1;
      break;
    }
  }
  out.resize(keep);
  std::sort(out.begin(), out.end());
  return out;
}

LabelSet cls_set(ClassificationSetKind kind, std::span<const double> probs,
                 double lambda_cls) {
  return kind == ClassificationSetKind::kLac ? cls_set_lac(probs, lambda_cls)
                                             : cls_set_aps(probs, lambda_cls);
}

}  // namespace seqcrc
