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
#include <utility>
#include <vector>

#include "seqcrc/losses.hpp"
#include "seqcrc/matching.hpp"
#include "seqcrc/predsets.hpp"
#include "seqcrc/sample.hpp"

namespace seqcrc {

struct Interval {
  double lower = 0.0;
  double upper = 1.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Everything that determines a calibration run. All losses are [0, 1]-valued,
/// so every loss bound B is 1.
struct CalibrationConfig {
  double alpha_cnf = 0.02;
  double alpha_loc = 0.05;
  double alpha_cls = 0.05;
  LossSpec loss;
  PredSetSpec predset;
  MatchDistanceSpec match;
  // Unset means: [0, largest image side or box coordinate] for additive
  // margins, [0, 3] for multiplicative ones.
  std::optional<Interval> lambda_loc_bounds;
  Interval lambda_cls_bounds{0.0, 1.0};
  int binary_search_steps = 32;
  double prefilter_threshold = 1e-3;
  // Negative-control hook for the Monte Carlo harness. Turning this off drops
  // the B/(n+1) terms and voids the guarantee.
  bool finite_sample_correction = true;

  friend bool operator==(const CalibrationConfig&,
                         const CalibrationConfig&) = default;
};

enum class Task { kLocalization, kClassification };
std::string_view to_string(Task task);

struct CalibrationDiagnostics {
  // Plain empirical risks on the calibration set at the returned parameters.
  double risk_cnf = 0.0;
  double risk_loc = 0.0;
  double risk_cls = 0.0;
  // Step-2 objective: monotonized risk at (lambda_cnf_minus, lambda_task_plus).
  double monotonized_risk_loc = 0.0;
  double monotonized_risk_cls = 0.0;
  Interval lambda_loc_bounds;
  Interval lambda_cls_bounds;
  std::size_t num_breakpoints = 0;

  friend bool operator==(const CalibrationDiagnostics&,
                         const CalibrationDiagnostics&) = default;
};

struct CalibrationResult {
  double lambda_cnf_plus = 1.0;
  double lambda_cnf_minus = 1.0;
  double lambda_loc_plus = 0.0;
  double lambda_cls_plus = 0.0;
  CalibrationConfig config;
  std::size_t n_calibration = 0;
  CalibrationDiagnostics diagnostics;

  friend bool operator==(const CalibrationResult&,
                         const CalibrationResult&) = default;
};

/// The conformal risk constraint  loss_sum / (n + 1) + bound / (n + 1) <= alpha,
/// i.e. n R_n / (n + 1) + B / (n + 1) <= alpha with R_n the empirical mean.
bool risk_constraint_holds(double loss_sum, std::size_t n, double bound,
                           double alpha);

// ---------------------------------------------------------------------------
// Single-parameter conformal risk control.

/// Non-increasing, right-continuous step function of lambda: `initial` below
/// the first breakpoint, then the value attached to the last breakpoint that
/// is <= lambda.
struct StepLoss {
  double initial = 0.0;
  std::vector<std::pair<double, double>> steps;  // ascending breakpoints

  double operator()(double lambda) const;

  /// The binary loss 1{lambda < score}.
  static StepLoss below(double score);
};

/// Smallest lambda in `domain` with  sum_i L_i(lambda) / (n+1) + B/(n+1) <= alpha.
/// Returns domain.upper when only the vanishing endpoint qualifies. Throws
/// InfeasibleError when alpha < B / (n + 1).
double crc_calibrate(std::span<const StepLoss> losses, double alpha,
                     double bound, Interval domain);

// ---------------------------------------------------------------------------
// Sequential calibration.

/// The piecewise-constant structure of confidence filtering over a dataset.
/// Breakpoints run from lambda = 1 downward through 1 - c for every distinct
/// confidence c; the selection of every image is constant between consecutive
/// breakpoints.
class ConfidenceSweep {
 public:
  struct State {
    std::size_t first_breakpoint;  // index where this selection starts
    std::size_t count;             // number of leading detections kept
  };

  explicit ConfidenceSweep(std::span<const ImageSample> samples);

  /// Strictly descending, lambdas().front() == 1.
  const std::vector<double>& lambdas() const { return lambdas_; }
  std::size_t num_images() const { return states_.size(); }

  /// Selection states of one image, ordered by first_breakpoint.
  const std::vector<State>& states(std::size_t image) const {
    return states_[image];
  }
  std::size_t count(std::size_t image, std::size_t breakpoint) const;

  /// Images whose selection changes on arrival at `breakpoint`.
  const std::vector<std::size_t>& changed_at(std::size_t breakpoint) const {
    return changed_[breakpoint];
  }

  /// Last breakpoint visited by a downward sweep that stops at lambda_stop:
  /// the first breakpoint <= lambda_stop, or the final one.
  std::size_t stop_index(double lambda_stop) const;

 private:
  std::vector<double> lambdas_;
  std::vector<std::vector<State>> states_;
  std::vector<std::vector<std::size_t>> changed_;
};

/// Resolved search interval for the localization parameter.
Interval localization_bounds(std::span<const ImageSample> samples,
                             const CalibrationConfig& config);

/// Throws PreconditionError unless alpha_task >= alpha_cnf + 1/(n+1) for both
/// tasks (the 1/(n+1) term is dropped when the finite-sample correction is off).
void check_alpha_precondition(const CalibrationConfig& config, std::size_t n);

/// Localization or classification loss of one image when its first `count`
/// detections are selected and matched as `matching`.
double task_loss(const ImageSample& sample, std::size_t count,
                 const MatchingAssignment& matching, Task task, double lambda,
                 const CalibrationConfig& config);

struct ConfidenceParameters {
  double plus = 1.0;
  double minus = 1.0;
};

/// Step 1 risk curve, one entry per visited breakpoint (descending lambda).
struct Step1Trace {
  std::vector<double> lambdas;
  std::vector<double> risk_cnf;  // empirical means
  std::vector<double> risk_loc;  // monotonized, at the localization upper bound
  std::vector<double> risk_cls;  // monotonized, at the classification upper bound
  std::vector<double> risk_max;
};

/// Confidence parameters from the downward breakpoint sweep with on-the-fly
/// monotonization of the localization and classification losses.
ConfidenceParameters seqcrc_step1(std::span<const ImageSample> samples,
                                  const CalibrationConfig& config,
                                  Step1Trace* trace = nullptr);

/// Evaluates the Step 2 objective: per image, the max of the task loss over
/// every selection reachable for lambda' >= lambda_cnf_minus.
class MonotonizedTaskRisk {
 public:
  MonotonizedTaskRisk(std::span<const ImageSample> samples,
                      const ConfidenceSweep& sweep, double lambda_cnf_minus,
                      Task task, const CalibrationConfig& config);

  /// Sum over images of the monotonized loss at `lambda`.
  double loss_sum(double lambda) const;
  std::size_t size() const { return images_.size(); }

 private:
  struct CachedState {
    std::size_t count;
    MatchingAssignment matching;
  };
  std::span<const ImageSample> samples_;
  std::vector<std::vector<CachedState>> images_;
  Task task_;
  const CalibrationConfig* config_;
};

struct BinarySearchTrace {
  std::vector<double> candidates;
  std::vector<bool> feasible;
};

/// Step 2: binary search over the task's bounds for the smallest lambda whose
/// monotonized risk satisfies the corrected constraint. Throws InfeasibleError
/// when no probed candidate qualifies.
double seqcrc_step2(std::span<const ImageSample> samples,
                    double lambda_cnf_minus, Task task,
                    const CalibrationConfig& config,
                    BinarySearchTrace* trace = nullptr);

/// Full pipeline: precondition check, Step 1, then Step 2 for both tasks.
CalibrationResult calibrate(std::span<const ImageSample> samples,
                            const CalibrationConfig& config);

}  // namespace seqcrc
