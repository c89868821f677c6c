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

#include "seqcrc/inference.hpp"

#include <algorithm>
#include <cmath>

#include "seqcrc/errors.hpp"
#include "seqcrc/losses.hpp"
#include "seqcrc/matching.hpp"
#include "seqcrc/predsets.hpp"

namespace seqcrc {

namespace {

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

double sorted_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const double n = static_cast<double>(values.size());
  return sorted_sum(std::move(values)) / n;
}

}  // namespace

ConformalPrediction infer(std::span<const Detection> detections,
                          const CalibrationResult& result) {
  const PredSetSpec& spec = result.config.predset;
  ConformalPrediction out;
  out.lambda_cnf = result.lambda_cnf_plus;
  out.lambda_loc = result.lambda_loc_plus;
  out.lambda_cls = result.lambda_cls_plus;
  for (std::size_t j = 0; j < detections.size(); ++j) {
    const Detection& d = detections[j];
    if (!passes_confidence(d.confidence, result.lambda_cnf_plus)) continue;
    out.objects.push_back({j, d.confidence, d.box,
                           loc_set(spec.localization, d.box, result.lambda_loc_plus),
                           cls_set(spec.classification, d.probs,
                                   result.lambda_cls_plus)});
  }
  return out;
}

ConformalPrediction infer(const ImageSample& sample,
                          const CalibrationResult& result) {
  ConformalPrediction out = infer(std::span(sample.detections), result);
  out.image_id = sample.image_id;
  return out;
}

EvaluationReport evaluate(std::span<const ImageSample> samples,
                          const CalibrationResult& result) {
  if (samples.empty()) throw DataError("test set is empty");
  const CalibrationConfig& config = result.config;
  EvaluationReport report;
  report.n_test = samples.size();

  std::vector<double> cnf, loc, cls, global, kept, loc_size, cls_size;
  for (const ImageSample& s : samples) {
    const ConformalPrediction pred = infer(s, result);
    const std::size_t k = pred.objects.size();
    if (k != count_confident(s.detections, result.lambda_cnf_plus)) {
      throw DataError("detections of image '" + s.image_id +
                      "' are not sorted by descending confidence");
    }
    const auto selected = std::span(s.detections).first(k);
    const MatchingAssignment matching = match(s.ground_truths, selected, config.match);

    std::vector<BoundingBox> margined;
    std::vector<LabelSet> labels;
    for (const PredictedObject& o : pred.objects) {
      margined.push_back(o.margined_box);
      labels.push_back(o.labels);
    }
    const double l_cnf = conf_loss(s, k, config.loss.confidence);
    const double l_loc = loc_loss(s, matching, margined, config.loss.localization,
                                  config.loss.localization_tau);
    const double l_cls = cls_loss(s, matching, labels, config.loss.classification,
                                  config.loss.aggregation_tau);
    cnf.push_back(l_cnf);
    loc.push_back(l_loc);
    cls.push_back(l_cls);
    global.push_back(std::max(l_loc, l_cls));
    kept.push_back(static_cast<double>(k));

    if (k == 0) {
      ++report.images_without_selection;
      continue;
    }
    std::vector<double> ratios, cardinalities;
    for (const PredictedObject& o : pred.objects) {
      cardinalities.push_back(static_cast<double>(o.labels.size()));
      const double a = area(o.box);
      if (a <= 0.0) {
        ++report.zero_area_predictions;
        continue;
      }
      ratios.push_back(std::sqrt(area(o.margined_box) / a));
    }
    if (!ratios.empty()) loc_size.push_back(sorted_mean(std::move(ratios)));
    cls_size.push_back(sorted_mean(std::move(cardinalities)));
  }

  report.risk_cnf = sorted_mean(std::move(cnf));
  report.risk_loc = sorted_mean(std::move(loc));
  report.risk_cls = sorted_mean(std::move(cls));
  report.risk_global = sorted_mean(std::move(global));
  report.set_size_cnf = sorted_mean(std::move(kept));
  report.set_size_loc = sorted_mean(std::move(loc_size));
  report.set_size_cls = sorted_mean(std::move(cls_size));
  return report;
}

}  // namespace seqcrc
