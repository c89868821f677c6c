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

#include "seqcrc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <spdlog/spdlog.h>

#include "seqcrc/errors.hpp"

namespace seqcrc {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double squash_confidence(double logit) { return 0.005 + 0.99 * sigmoid(logit); }

class Generator {
 public:
  explicit Generator(const SynthSpec& spec) : spec_(spec), rng_(spec.seed) {}

  ImageSample image(int index) {
    const int n_objects =
        std::uniform_int_distribution<int>(spec_.min_objects, spec_.max_objects)(rng_);
    std::vector<GroundTruth> gts;
    std::vector<Detection> dets;
    for (int j = 0; j < n_objects; ++j) {
      const ClassLabel label = random_label();
      const BoundingBox box = random_box();
      gts.push_back({box, label});
      dets.push_back(true_detection(box, label));
    }
    const int n_fp = spec_.fp_rate > 0.0
                         ? std::poisson_distribution<int>(spec_.fp_rate)(rng_)
                         : 0;
    for (int j = 0; j < n_fp; ++j) dets.push_back(false_positive());
    if (dets.empty()) dets.push_back(false_positive());
    if (dets.size() < std::max<std::size_t>(1, gts.size())) {
      throw std::logic_error("synthetic image has fewer detections than objects");
    }
    return make_image_sample("synth-" + std::to_string(index), std::move(gts),
                             std::move(dets));
  }

 private:
  ClassLabel random_label() {
    return std::uniform_int_distribution<ClassLabel>(0, spec_.num_classes - 1)(rng_);
  }

  BoundingBox random_box() {
    std::uniform_real_distribution<double> side(spec_.min_box_side, spec_.max_box_side);
    const double w = std::min(side(rng_), spec_.width);
    const double h = std::min(side(rng_), spec_.height);
    const double x = std::uniform_real_distribution<double>(0.0, spec_.width - w)(rng_);
    const double y = std::uniform_real_distribution<double>(0.0, spec_.height - h)(rng_);
    return {x, y, x + w, y + h};
  }

  BoundingBox clamp_to_image(BoundingBox b) const {
    b.left = std::clamp(b.left, 0.0, spec_.width);
    b.right = std::clamp(b.right, 0.0, spec_.width);
    b.top = std::clamp(b.top, 0.0, spec_.height);
    b.bottom = std::clamp(b.bottom, 0.0, spec_.height);
    if (b.left > b.right) std::swap(b.left, b.right);
    if (b.top > b.bottom) std::swap(b.top, b.bottom);
    return b;
  }

  ProbabilityVector class_probs(std::optional<ClassLabel> boosted) {
    std::normal_distribution<double> noise(0.0, spec_.logit_noise_std);
    std::vector<double> logits(static_cast<std::size_t>(spec_.num_classes));
    for (double& l : logits) l = spec_.logit_noise_std > 0.0 ? noise(rng_) : 0.0;
    if (boosted) logits[static_cast<std::size_t>(*boosted)] += spec_.class_boost;
    const double top = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double& l : logits) {
      l = std::exp((l - top) / spec_.temperature);
      sum += l;
    }
    for (double& l : logits) l /= sum;
    return logits;
  }

  double jitter() {
    return spec_.conf_jitter > 0.0
               ? std::normal_distribution<double>(0.0, spec_.conf_jitter)(rng_)
               : 0.0;
  }

  Detection true_detection(const BoundingBox& gt, ClassLabel label) {
    double z = 0.0;
    BoundingBox box = gt;
    if (spec_.box_noise_std > 0.0) {
      std::normal_distribution<double> noise(0.0, spec_.box_noise_std);
      double e[4];
      for (double& v : e) v = noise(rng_);
      box = clamp_to_image({gt.left + e[0], gt.top + e[1], gt.right + e[2], gt.bottom + e[3]});
      const double sq = e[0] * e[0] + e[1] * e[1] + e[2] * e[2] + e[3] * e[3];
      z = std::sqrt(sq / 4.0) / spec_.box_noise_std;
    }
    ClassLabel shown = label;
    if (spec_.num_classes > 1 && spec_.label_flip_prob > 0.0 &&
        std::bernoulli_distribution(spec_.label_flip_prob)(rng_)) {
      const ClassLabel other =
          std::uniform_int_distribution<ClassLabel>(0, spec_.num_classes - 2)(rng_);
      shown = other >= label ? other + 1 : other;
    }
    Detection d;
    d.box = box;
    d.probs = class_probs(shown);
    d.confidence = squash_confidence(spec_.conf_base - spec_.conf_noise_coupling * z + jitter());
    return d;
  }

  Detection false_positive() {
    Detection d;
    d.box = random_box();
    d.probs = class_probs(random_label());
    d.confidence = squash_confidence(spec_.fp_logit + jitter());
    return d;
  }

  const SynthSpec& spec_;
  std::mt19937_64 rng_;
};

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

RiskSummary summarize_risk(std::vector<double> values, double alpha) {
  RiskSummary s;
  s.alpha = alpha;
  const double t = static_cast<double>(values.size());
  if (values.empty()) return s;
  s.mean = sorted_sum(values) / t;
  std::vector<double> sq;
  std::size_t above = 0;
  for (double v : values) {
    sq.push_back((v - s.mean) * (v - s.mean));
    if (v > alpha) ++above;
  }
  s.std_error = values.size() > 1 ? std::sqrt(sorted_sum(sq) / (t - 1.0) / t) : 0.0;
  s.fraction_above_alpha = static_cast<double>(above) / t;
  return s;
}

}  // namespace

void validate_spec(const SynthSpec& spec) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid synth spec: ") + what);
  };
  require(spec.n_images >= 0, "n_images must be non-negative");
  require(spec.num_classes >= 1, "num_classes must be positive");
  require(spec.width > 0.0 && spec.height > 0.0, "image size must be positive");
  require(spec.min_objects >= 0 && spec.min_objects <= spec.max_objects,
          "need 0 <= min_objects <= max_objects");
  require(spec.min_box_side > 0.0 && spec.min_box_side <= spec.max_box_side,
          "need 0 < min_box_side <= max_box_side");
  require(spec.box_noise_std >= 0.0, "box_noise_std must be non-negative");
  require(spec.conf_jitter >= 0.0, "conf_jitter must be non-negative");
  require(spec.fp_rate >= 0.0, "fp_rate must be non-negative");
  require(spec.label_flip_prob >= 0.0 && spec.label_flip_prob <= 1.0,
          "label_flip_prob must lie in [0, 1]");
  require(spec.logit_noise_std >= 0.0, "logit_noise_std must be non-negative");
  require(spec.temperature > 0.0, "temperature must be positive");
}

std::vector<ImageSample> generate(const SynthSpec& spec) {
  validate_spec(spec);
  Generator gen(spec);
  std::vector<ImageSample> out;
  out.reserve(static_cast<std::size_t>(spec.n_images));
  for (int i = 0; i < spec.n_images; ++i) {
    out.push_back(gen.image(i));
    out.back().width = spec.width;
    out.back().height = spec.height;
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over a combination of both inputs.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool ValidationReport::within(double slack) const {
  return cnf.mean <= cnf.alpha + slack && loc.mean <= loc.alpha + slack &&
         cls.mean <= cls.alpha + slack && global.mean <= global.alpha + slack;
}

void summarize(ValidationReport& report, const CalibrationConfig& config) {
  std::vector<double> cnf, loc, cls, global, l_cp, l_cm, l_loc, l_cls, s_cnf, s_loc, s_cls;
  for (const TrialOutcome& t : report.outcomes) {
    cnf.push_back(t.report.risk_cnf);
    loc.push_back(t.report.risk_loc);
    cls.push_back(t.report.risk_cls);
    global.push_back(t.report.risk_global);
    l_cp.push_back(t.result.lambda_cnf_plus);
    l_cm.push_back(t.result.lambda_cnf_minus);
    l_loc.push_back(t.result.lambda_loc_plus);
    l_cls.push_back(t.result.lambda_cls_plus);
    s_cnf.push_back(t.report.set_size_cnf);
    s_loc.push_back(t.report.set_size_loc);
    s_cls.push_back(t.report.set_size_cls);
  }
  report.cnf = summarize_risk(std::move(cnf), config.alpha_cnf);
  report.loc = summarize_risk(std::move(loc), config.alpha_loc);
  report.cls = summarize_risk(std::move(cls), config.alpha_cls);
  report.global = summarize_risk(std::move(global), config.alpha_loc + config.alpha_cls);
  const double t = std::max<double>(1.0, static_cast<double>(report.outcomes.size()));
  report.mean_lambda_cnf_plus = sorted_sum(std::move(l_cp)) / t;
  report.mean_lambda_cnf_minus = sorted_sum(std::move(l_cm)) / t;
  report.mean_lambda_loc_plus = sorted_sum(std::move(l_loc)) / t;
  report.mean_lambda_cls_plus = sorted_sum(std::move(l_cls)) / t;
  report.mean_set_size_cnf = sorted_sum(std::move(s_cnf)) / t;
  report.mean_set_size_loc = sorted_sum(std::move(s_loc)) / t;
  report.mean_set_size_cls = sorted_sum(std::move(s_cls)) / t;
}

ValidationReport monte_carlo_validate(const SynthSpec& spec,
                                      const CalibrationConfig& config, int trials,
                                      int n_cal, int n_test) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n_cal < 1 || n_test < 1) throw std::invalid_argument("n_cal and n_test must be positive");
  ValidationReport report;
  report.trials = trials;
  report.n_calibration = n_cal;
  report.n_test = n_test;
  for (int t = 0; t < trials; ++t) {
    SynthSpec draw = spec;
    draw.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    draw.n_images = n_cal + n_test;
    const std::vector<ImageSample> images = generate(draw);
    const std::span<const ImageSample> all(images);
    TrialOutcome outcome;
    outcome.seed = draw.seed;
    try {
      outcome.result = calibrate(all.first(static_cast<std::size_t>(n_cal)), config);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("trial " + std::to_string(t) + ": " + e.what());
    } catch (const PreconditionError& e) {
      throw PreconditionError("trial " + std::to_string(t) + ": " + e.what());
    }
    outcome.report = evaluate(all.subspan(static_cast<std::size_t>(n_cal)), outcome.result);
    spdlog::debug("trial {}: loc={:.4f} cls={:.4f} cnf={:.4f}", t, outcome.report.risk_loc,
                  outcome.report.risk_cls, outcome.report.risk_cnf);
    report.outcomes.push_back(std::move(outcome));
  }
  summarize(report, config);
  return report;
}

}  // namespace seqcrc
