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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seqcrc/calibration.hpp"
#include "seqcrc/inference.hpp"
#include "seqcrc/sample.hpp"

namespace seqcrc {

inline constexpr const char* kDatasetSchema = "seqcrc-dataset";
inline constexpr int kDatasetVersion = 1;
inline constexpr const char* kResultSchema = "seqcrc-calibration-result";
inline constexpr int kResultVersion = 1;

struct Dataset {
  int num_classes = 0;
  std::vector<std::string> class_names;
  std::vector<ImageSample> images;
  // Human-readable notes produced while building the dataset (e.g. synthesized
  // probability vectors on COCO import).
  std::vector<std::string> warnings;
};

/// Parses and validates a native dataset document. Detections below
/// `prefilter_threshold` are dropped and the rest sorted by confidence.
/// Throws DataError naming the image and record on any violation.
Dataset dataset_from_json(const nlohmann::json& doc,
                          double prefilter_threshold = 0.0);
nlohmann::json dataset_to_json(const Dataset& dataset);

Dataset load_dataset(const std::filesystem::path& path,
                     double prefilter_threshold = 0.0);
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);

/// Builds a dataset from COCO annotations and COCO detection results.
/// Detections may carry a "scores" array of length K (dense class order);
/// without it a near one-hot vector is synthesized and a warning recorded.
Dataset import_coco(const nlohmann::json& annotations,
                    const nlohmann::json& detections);
Dataset import_coco(const std::filesystem::path& gt_path,
                    const std::filesystem::path& det_path);

nlohmann::json config_to_json(const CalibrationConfig& config);
/// Missing keys keep the values already in `base`.
CalibrationConfig config_from_json(const nlohmann::json& doc,
                                   CalibrationConfig base = {});

/// Hex SHA-256 of the canonical serialization of `config`.
std::string config_digest(const CalibrationConfig& config);

nlohmann::json result_to_json(const CalibrationResult& result);
/// Throws VersionError on schema/version mismatch and DigestMismatchError
/// when the stored digest does not match the stored config.
CalibrationResult result_from_json(const nlohmann::json& doc);

void save_result(const CalibrationResult& result,
                 const std::filesystem::path& path);
CalibrationResult load_result(const std::filesystem::path& path);

/// Throws DigestMismatchError unless `config` hashes like the config the
/// result was calibrated with.
void verify_config(const CalibrationResult& result,
                   const CalibrationConfig& config);

nlohmann::json prediction_to_json(const ConformalPrediction& prediction);
nlohmann::json report_to_json(const EvaluationReport& report);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

}  // namespace seqcrc
