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

#include <cstdint>
#include <vector>

#include "seqcrc/calibration.hpp"
#include "seqcrc/inference.hpp"
#include "seqcrc/sample.hpp"

namespace seqcrc {

/// Parameters of the synthetic detection problem. Every ground truth gets a
/// noisy twin detection; false positives are added on top.
struct SynthSpec {
  std::uint64_t seed = 0;
  int n_images = 100;
  int num_classes = 5;
  double width = 640.0;
  double height = 480.0;
  int min_objects = 0;
  int max_objects = 4;
  double min_box_side = 20.0;
  double max_box_side = 200.0;
  // Standard deviation of the Gaussian noise on each corner of a true
  // detection, in pixels.
  double box_noise_std = 5.0;
  // Confidence of a true detection is
  //   0.005 + 0.99 * sigmoid(conf_base - conf_noise_coupling * z + N(0, conf_jitter))
  // with z the RMS corner noise in units of box_noise_std.
  double conf_base = 2.0;
  double conf_noise_coupling = 1.5;
  double conf_jitter = 0.5;
  // False positives per image ~ Poisson(fp_rate), confidence logit fp_logit.
  double fp_rate = 0.5;
  double fp_logit = -2.0;
  double label_flip_prob = 0.05;
  // Class logits: N(0, logit_noise_std) plus class_boost on the (possibly
  // flipped) label, softmax at `temperature`.
  double logit_noise_std = 1.0;
  double class_boost = 3.0;
  double temperature = 1.0;

  friend bool operator==(const SynthSpec&, const SynthSpec&) = default;
};

/// Throws std::invalid_argument on inconsistent parameters.
void validate_spec(const SynthSpec& spec);

/// Deterministic in spec.seed. Every image has at least max(1, #ground
/// truths) detections, all inside the image.
std::vector<ImageSample> generate(const SynthSpec& spec);

/// Independent per-trial seed derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct RiskSummary {
  double mean = 0.0;
  double std_error = 0.0;
  double fraction_above_alpha = 0.0;
  double alpha = 0.0;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  CalibrationResult result;
  EvaluationReport report;
};

struct ValidationReport {
  int trials = 0;
  int n_calibration = 0;
  int n_test = 0;
  RiskSummary cnf, loc, cls, global;
  double mean_lambda_cnf_plus = 0.0;
  double mean_lambda_cnf_minus = 0.0;
  double mean_lambda_loc_plus = 0.0;
  double mean_lambda_cls_plus = 0.0;
  double mean_set_size_cnf = 0.0;
  double mean_set_size_loc = 0.0;
  double mean_set_size_cls = 0.0;
  std::vector<TrialOutcome> outcomes;  // in trial order

  /// Whether every mean risk is within `slack` of its level (alpha_cnf,
  /// alpha_loc, alpha_cls and alpha_loc + alpha_cls for the global risk).
  bool within(double slack) const;
};

/// Repeats calibrate-then-evaluate on fresh synthetic draws. Trial t uses
/// derive_seed(spec.seed, t); calibration errors are rethrown with the trial
/// index prepended.
ValidationReport monte_carlo_validate(const SynthSpec& spec,
                                      const CalibrationConfig& config,
                                      int trials, int n_cal, int n_test);

/// Recomputes the summary statistics from trial outcomes (exposed so the
/// reduction can be checked for order invariance).
void summarize(ValidationReport& report, const CalibrationConfig& config);

}  // namespace seqcrc
