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

#include "seqcrc/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <spdlog/spdlog.h>

#include "seqcrc/errors.hpp"

namespace seqcrc {

namespace {

constexpr double kLossBound = 1.0;
constexpr double kDefaultMultiplicativeUpper = 3.0;

double correction_bound(const CalibrationConfig& config) {
  return config.finite_sample_correction ? kLossBound : 0.0;
}

void require_nonempty(std::span<const ImageSample> samples) {
  if (samples.empty()) {
    throw DataError("calibration set is empty");
  }
}

void require_alpha(double alpha, const char* name) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in (0, 1), got " << alpha;
    throw PreconditionError(msg.str());
  }
}

double task_alpha(const CalibrationConfig& config, Task task) {
  return task == Task::kLocalization ? config.alpha_loc : config.alpha_cls;
}

}  // namespace

std::string_view to_string(Task task) {
  return task == Task::kLocalization ? "localization" : "classification";
}

bool risk_constraint_holds(double loss_sum, std::size_t n, double bound,
                           double alpha) {
  const double denom = static_cast<double>(n) + 1.0;
  return loss_sum / denom + bound / denom <= alpha;
}

// ---------------------------------------------------------------------------

double StepLoss::operator()(double lambda) const {
  double value = initial;
  for (const auto& [breakpoint, v] : steps) {
    if (breakpoint > lambda) break;
    value = v;
  }
  return value;
}

StepLoss StepLoss::below(double score) {
  return StepLoss{1.0, {{score, 0.0}}};
}

double crc_calibrate(std::span<const StepLoss> losses, double alpha,
                     double bound, Interval domain) {
  const std::size_t n = losses.size();
  if (alpha < bound / (static_cast<double>(n) + 1.0)) {
    std::ostringstream msg;
    msg << "alpha=" << alpha << " is below B/(n+1)=" << bound << "/" << n + 1;
    throw InfeasibleError(msg.str());
  }
  // The loss sum only changes at breakpoints, so the infimum is attained at
  // the lower end or at one of them.
  std::vector<double> candidates{domain.lower};
  for (const StepLoss& loss : losses) {
    for (const auto& step : loss.steps) {
      if (step.first > domain.lower && step.first <= domain.upper) {
        candidates.push_back(step.first);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (double lambda : candidates) {
    double sum = 0.0;
    for (const StepLoss& loss : losses) sum += loss(lambda);
    if (risk_constraint_holds(sum, n, bound, alpha)) return lambda;
  }
  return domain.upper;
}

// ---------------------------------------------------------------------------

ConfidenceSweep::ConfidenceSweep(std::span<const ImageSample> samples) {
  std::vector<double> confidences{1.0};
  for (const ImageSample& s : samples) {
    for (const Detection& d : s.detections) confidences.push_back(d.confidence);
  }
  std::sort(confidences.begin(), confidences.end());
  confidences.erase(std::unique(confidences.begin(), confidences.end()),
                    confidences.end());

  // confidences.front() is the smallest score; sweeping past it keeps
  // everything, so the first threshold below 1 comes from the second entry.
  lambdas_.push_back(1.0);
  for (std::size_t k = 1; k < confidences.size(); ++k) {
    const double lambda = 1.0 - confidences[k];
    if (lambda < lambdas_.back()) lambdas_.push_back(lambda);
  }

  states_.resize(samples.size());
  changed_.assign(lambdas_.size(), {});
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& dets = samples[i].detections;
    // drop[k]: first breakpoint at which detection k is filtered out
    // (lambdas_.size() when it never is).
    std::vector<std::size_t> drop(dets.size());
    for (std::size_t k = 0; k < dets.size(); ++k) {
      const auto it = std::partition_point(
          lambdas_.begin(), lambdas_.end(),
          [&](double l) { return passes_confidence(dets[k].confidence, l); });
      drop[k] = static_cast<std::size_t>(it - lambdas_.begin());
      if (k > 0 && drop[k] > drop[k - 1]) {
        throw DataError("detections of image '" + samples[i].image_id +
                        "' are not sorted by descending confidence");
      }
    }
    auto& states = states_[i];
    states.push_back({0, dets.size()});
    // Walk the drop points from the lowest-confidence detection upward.
    std::size_t kept = dets.size();
    while (kept > 0 && drop[kept - 1] < lambdas_.size()) {
      const std::size_t m = drop[kept - 1];
      while (kept > 0 && drop[kept - 1] == m) --kept;
      if (m == 0) {
        states.front().count = kept;
        continue;
      }
      states.push_back({m, kept});
      changed_[m].push_back(i);
    }
  }
}

std::size_t ConfidenceSweep::count(std::size_t image,
                                   std::size_t breakpoint) const {
  const auto& states = states_[image];
  const auto it = std::upper_bound(
      states.begin(), states.end(), breakpoint,
      [](std::size_t m, const State& s) { return m < s.first_breakpoint; });
  return std::prev(it)->count;
}

std::size_t ConfidenceSweep::stop_index(double lambda_stop) const {
  const auto it = std::partition_point(
      lambdas_.begin(), lambdas_.end(),
      [&](double l) { return l > lambda_stop; });
  if (it == lambdas_.end()) return lambdas_.size() - 1;
  return static_cast<std::size_t>(it - lambdas_.begin());
}

// ---------------------------------------------------------------------------

Interval localization_bounds(std::span<const ImageSample> samples,
                             const CalibrationConfig& config) {
  Interval bounds;
  if (config.lambda_loc_bounds) {
    bounds = *config.lambda_loc_bounds;
  } else if (config.predset.localization == LocalizationSetKind::kAdditive) {
    double side = 0.0;
    for (const ImageSample& s : samples) {
      side = std::max({side, s.width, s.height});
      // Fall back to the box extents when the image size is unknown.
      for (const GroundTruth& g : s.ground_truths) {
        side = std::max({side, std::abs(g.box.right), std::abs(g.box.bottom)});
      }
      for (const Detection& d : s.detections) {
        side = std::max({side, std::abs(d.box.right), std::abs(d.box.bottom)});
      }
    }
    // Nothing to localize at all: any nondegenerate interval will do.
    bounds = {0.0, side > 0.0 ? side : 1.0};
  } else {
    bounds = {0.0, kDefaultMultiplicativeUpper};
  }
  if (!(bounds.lower >= 0.0 && bounds.lower < bounds.upper)) {
    std::ostringstream msg;
    msg << "invalid localization bounds [" << bounds.lower << ", "
        << bounds.upper << "]";
    throw PreconditionError(msg.str());
  }
  return bounds;
}

void check_alpha_precondition(const CalibrationConfig& config, std::size_t n) {
  require_alpha(config.alpha_cnf, "alpha_cnf");
  require_alpha(config.alpha_loc, "alpha_loc");
  require_alpha(config.alpha_cls, "alpha_cls");
  const double slack =
      correction_bound(config) / (static_cast<double>(n) + 1.0);
  const double needed = config.alpha_cnf + slack;
  for (Task task : {Task::kLocalization, Task::kClassification}) {
    const double alpha = task_alpha(config, task);
    if (alpha < needed) {
      std::ostringstream msg;
      msg << "alpha_" << (task == Task::kLocalization ? "loc" : "cls") << "="
          << alpha << " violates alpha_task >= alpha_cnf + 1/(n+1) = "
          << config.alpha_cnf << " + 1/" << n + 1 << " = " << needed;
      throw PreconditionError(msg.str());
    }
  }
}

double task_loss(const ImageSample& sample, std::size_t count,
                 const MatchingAssignment& matching, Task task, double lambda,
                 const CalibrationConfig& config) {
  const auto& gts = sample.ground_truths;
  if (gts.empty()) return 0.0;
  if (count == 0) return 1.0;
  const auto& dets = sample.detections;
  if (task == Task::kLocalization) {
    std::vector<BoundingBox> margined(count);
    for (const auto& j : matching) {
      margined[*j] = loc_set(config.predset.localization, dets[*j].box, lambda);
    }
    return loc_loss(gts, matching, margined, config.loss.localization,
                    config.loss.localization_tau);
  }
  std::vector<LabelSet> sets(count);
  for (const auto& j : matching) {
    if (sets[*j].empty()) {
      sets[*j] = cls_set(config.predset.classification, dets[*j].probs, lambda);
    }
  }
  return cls_loss(gts, matching, sets, config.loss.classification,
                  config.loss.aggregation_tau);
}

// ---------------------------------------------------------------------------

ConfidenceParameters seqcrc_step1(std::span<const ImageSample> samples,
                                  const CalibrationConfig& config,
                                  Step1Trace* trace) {
  require_nonempty(samples);
  const std::size_t n = samples.size();
  const ConfidenceSweep sweep(samples);
  const auto& lambdas = sweep.lambdas();
  const double loc_upper = localization_bounds(samples, config).upper;
  const double cls_upper = config.lambda_cls_bounds.upper;
  const double bound_plus = correction_bound(config);

  std::vector<double> l_cnf(n), l_loc(n), l_cls(n);
  auto update = [&](std::size_t i, std::size_t m, bool monotonize) {
    const ImageSample& s = samples[i];
    const std::size_t k = sweep.count(i, m);
    const MatchingAssignment matching =
        match(s.ground_truths, std::span(s.detections).first(k), config.match);
    l_cnf[i] = conf_loss(s, k, config.loss.confidence);
    const double loc =
        task_loss(s, k, matching, Task::kLocalization, loc_upper, config);
    const double cls =
        task_loss(s, k, matching, Task::kClassification, cls_upper, config);
    l_loc[i] = monotonize ? std::max(l_loc[i], loc) : loc;
    l_cls[i] = monotonize ? std::max(l_cls[i], cls) : cls;
  };
  // Fixed summation order keeps the risk path exactly monotone.
  auto sum = [](const std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) total += x;
    return total;
  };

  for (std::size_t i = 0; i < n; ++i) update(i, 0, false);

  ConfidenceParameters out{0.0, 0.0};
  bool plus_done = false;
  bool minus_done = false;
  double previous = -1.0;
  for (std::size_t m = 0; m < lambdas.size(); ++m) {
    if (m > 0) {
      for (std::size_t i : sweep.changed_at(m)) update(i, m, true);
    }
    const double s_cnf = sum(l_cnf);
    const double s_loc = sum(l_loc);
    const double s_cls = sum(l_cls);
    const double risk = std::max({s_cnf, s_loc, s_cls});
    if (risk < previous) {
      throw std::logic_error("monotonized step-1 risk decreased at lambda=" +
                             std::to_string(lambdas[m]));
    }
    previous = risk;
    if (trace) {
      const double nd = static_cast<double>(n);
      trace->lambdas.push_back(lambdas[m]);
      trace->risk_cnf.push_back(s_cnf / nd);
      trace->risk_loc.push_back(s_loc / nd);
      trace->risk_cls.push_back(s_cls / nd);
      trace->risk_max.push_back(risk / nd);
    }
    const double last_ok = m == 0 ? 1.0 : lambdas[m - 1];
    if (!plus_done &&
        !risk_constraint_holds(risk, n, bound_plus, config.alpha_cnf)) {
      out.plus = last_ok;
      plus_done = true;
    }
    if (!minus_done && !risk_constraint_holds(risk, n, 0.0, config.alpha_cnf)) {
      out.minus = last_ok;
      minus_done = true;
    }
    if (plus_done && minus_done) break;
  }
  spdlog::debug("step 1: lambda_cnf+={} lambda_cnf-={} over {} breakpoints",
                out.plus, out.minus, lambdas.size());
  return out;
}

// ---------------------------------------------------------------------------

MonotonizedTaskRisk::MonotonizedTaskRisk(std::span<const ImageSample> samples,
                                         const ConfidenceSweep& sweep,
                                         double lambda_cnf_minus, Task task,
                                         const CalibrationConfig& config)
    : samples_(samples), images_(samples.size()), task_(task), config_(&config) {
  const std::size_t stop = sweep.stop_index(lambda_cnf_minus);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ImageSample& s = samples[i];
    for (const auto& state : sweep.states(i)) {
      if (state.first_breakpoint > stop) break;
      images_[i].push_back(
          {state.count,
           match(s.ground_truths, std::span(s.detections).first(state.count),
                 config.match)});
    }
  }
}

double MonotonizedTaskRisk::loss_sum(double lambda) const {
  double total = 0.0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    double worst = 0.0;
    for (const CachedState& st : images_[i]) {
      worst = std::max(
          worst, task_loss(samples_[i], st.count, st.matching, task_, lambda,
                           *config_));
      if (worst >= kLossBound) break;
    }
    total += worst;
  }
  return total;
}

double seqcrc_step2(std::span<const ImageSample> samples,
                    double lambda_cnf_minus, Task task,
                    const CalibrationConfig& config, BinarySearchTrace* trace) {
  require_nonempty(samples);
  const std::size_t n = samples.size();
  const Interval bounds = task == Task::kLocalization
                              ? localization_bounds(samples, config)
                              : config.lambda_cls_bounds;
  const double alpha = task_alpha(config, task);
  const double bound = correction_bound(config);
  const ConfidenceSweep sweep(samples);
  const MonotonizedTaskRisk risk(samples, sweep, lambda_cnf_minus, task, config);

  double lo = bounds.lower;
  double hi = bounds.upper;
  std::optional<double> best;
  double smallest_sum = std::numeric_limits<double>::infinity();
  for (int step = 0; step < config.binary_search_steps; ++step) {
    const double mid = lo + (hi - lo) / 2.0;
    const double total = risk.loss_sum(mid);
    smallest_sum = std::min(smallest_sum, total);
    const bool ok = risk_constraint_holds(total, n, bound, alpha);
    if (trace) {
      trace->candidates.push_back(mid);
      trace->feasible.push_back(ok);
    }
    if (ok) {
      best = mid;
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (!best) {
    std::ostringstream msg;
    msg << to_string(task) << " risk infeasible: smallest monotonized risk "
        << smallest_sum / static_cast<double>(n) << " over [" << bounds.lower
        << ", " << bounds.upper << "] at lambda_cnf-=" << lambda_cnf_minus
        << " exceeds the corrected target for alpha=" << alpha;
    throw InfeasibleError(msg.str());
  }
  spdlog::debug("step 2 ({}): lambda={}", to_string(task), *best);
  return *best;
}

// ---------------------------------------------------------------------------

CalibrationResult calibrate(std::span<const ImageSample> samples,
                            const CalibrationConfig& config) {
  require_nonempty(samples);
  const std::size_t n = samples.size();
  check_alpha_precondition(config, n);
  if (config.binary_search_steps <= 0) {
    throw PreconditionError("binary_search_steps must be positive");
  }
  const Interval cls = config.lambda_cls_bounds;
  if (!(cls.lower >= 0.0 && cls.lower < cls.upper && cls.upper <= 1.0)) {
    throw PreconditionError("classification bounds must satisfy 0 <= l < u <= 1");
  }

  CalibrationResult result;
  result.config = config;
  result.n_calibration = n;
  const ConfidenceParameters cnf = seqcrc_step1(samples, config);
  result.lambda_cnf_plus = cnf.plus;
  result.lambda_cnf_minus = cnf.minus;
  result.lambda_loc_plus =
      seqcrc_step2(samples, cnf.minus, Task::kLocalization, config);
  result.lambda_cls_plus =
      seqcrc_step2(samples, cnf.minus, Task::kClassification, config);

  CalibrationDiagnostics& diag = result.diagnostics;
  diag.lambda_loc_bounds = localization_bounds(samples, config);
  diag.lambda_cls_bounds = cls;
  const ConfidenceSweep sweep(samples);
  diag.num_breakpoints = sweep.lambdas().size();
  const double nd = static_cast<double>(n);
  double s_cnf = 0.0, s_loc = 0.0, s_cls = 0.0;
  for (const ImageSample& s : samples) {
    const std::size_t k = count_confident(s.detections, result.lambda_cnf_plus);
    const auto matching =
        match(s.ground_truths, std::span(s.detections).first(k), config.match);
    s_cnf += conf_loss(s, k, config.loss.confidence);
    s_loc += task_loss(s, k, matching, Task::kLocalization,
                       result.lambda_loc_plus, config);
    s_cls += task_loss(s, k, matching, Task::kClassification,
                       result.lambda_cls_plus, config);
  }
  diag.risk_cnf = s_cnf / nd;
  diag.risk_loc = s_loc / nd;
  diag.risk_cls = s_cls / nd;
  diag.monotonized_risk_loc =
      MonotonizedTaskRisk(samples, sweep, cnf.minus, Task::kLocalization, config)
          .loss_sum(result.lambda_loc_plus) / nd;
  diag.monotonized_risk_cls =
      MonotonizedTaskRisk(samples, sweep, cnf.minus, Task::kClassification,
                          config)
          .loss_sum(result.lambda_cls_plus) / nd;

  spdlog::info(
      "calibrated on n={}: lambda_cnf+={:.6g} lambda_cnf-={:.6g} "
      "lambda_loc+={:.6g} lambda_cls+={:.6g}",
      n, result.lambda_cnf_plus, result.lambda_cnf_minus,
      result.lambda_loc_plus, result.lambda_cls_plus);
  return result;
}

}  // namespace seqcrc
