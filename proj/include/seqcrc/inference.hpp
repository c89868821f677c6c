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
#include <string>
#include <vector>

#include "seqcrc/calibration.hpp"
#include "seqcrc/sample.hpp"

namespace seqcrc {

/// One kept detection with its localization and classification sets.
struct PredictedObject {
  std::size_t detection_index = 0;
  double confidence = 0.0;
  BoundingBox box;           // as predicted
  BoundingBox margined_box;  // localization set
  LabelSet labels;           // classification set
};

struct ConformalPrediction {
  std::string image_id;
  std::vector<PredictedObject> objects;
  double lambda_cnf = 1.0;
  double lambda_loc = 0.0;
  double lambda_cls = 0.0;
};

/// Applies the calibrated plus parameters to one image's detections. Kept
/// objects appear in input order and reference input indices; the caller is
/// expected to have applied the calibration prefilter.
ConformalPrediction infer(std::span<const Detection> detections,
                          const CalibrationResult& result);
ConformalPrediction infer(const ImageSample& sample,
                          const CalibrationResult& result);

struct EvaluationReport {
  std::size_t n_test = 0;
  double risk_cnf = 0.0;
  double risk_loc = 0.0;
  double risk_cls = 0.0;
  // Mean over images of max(loc loss, cls loss).
  double risk_global = 0.0;
  // Mean number of kept detections per image.
  double set_size_cnf = 0.0;
  // Mean over images with a non-empty selection of the mean
  // sqrt(area(margined) / area(predicted)); zero-area predictions are skipped.
  double set_size_loc = 0.0;
  // Mean over images with a non-empty selection of the mean label-set size.
  double set_size_cls = 0.0;
  std::size_t images_without_selection = 0;
  std::size_t zero_area_predictions = 0;
};

/// Test-set risks and set sizes for a calibrated result. Per-image values are
/// summed in sorted order, so the report does not depend on image order.
EvaluationReport evaluate(std::span<const ImageSample> samples,
                          const CalibrationResult& result);

}  // namespace seqcrc
