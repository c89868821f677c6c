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

#include "seqcrc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "seqcrc/calibration.hpp"
#include "seqcrc/dataio.hpp"
#include "seqcrc/errors.hpp"
#include "seqcrc/inference.hpp"
#include "seqcrc/synth.hpp"

namespace seqcrc {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CliFailure : public Error {
 public:
  CliFailure(int code, std::string kind, const std::string& message)
      : Error(message), code_(code), kind_(std::move(kind)) {}
  int code() const { return code_; }
  const std::string& kind() const { return kind_; }

 private:
  int code_;
  std::string kind_;
};

struct Options {
  std::string config_path;
  std::string dataset;
  std::string result;
  std::string out;
  std::string gt;
  std::string detections;

  std::optional<double> alpha_cnf, alpha_loc, alpha_cls;
  std::optional<std::string> loss_cnf, loss_loc, loss_cls;
  std::optional<double> loss_loc_tau, loss_cls_tau;
  std::optional<std::string> predset_loc, predset_cls, match;
  std::optional<double> tau, prefilter, loc_lower, loc_upper;
  std::optional<int> steps;
  bool no_correction = false;
  bool allow_mismatch = false;

  std::optional<std::uint64_t> seed;
  std::optional<int> trials, n_cal, n_test, n_images;
  std::optional<double> slack;
};

// Contents of --config: {"config": {...}, "dataset": ..., "result": ...,
// "out": ..., "validate": {"synth": {...}, "trials": ..., ...}}.
struct ConfigFile {
  json doc = json::object();
  fs::path base;

  std::string path_or(const char* key, const std::string& flag) const {
    if (!flag.empty()) return flag;
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_string()) return {};
    const fs::path p(it->get<std::string>());
    return (p.is_absolute() ? p : base / p).string();
  }
  const json& section(const char* key) const {
    static const json empty = json::object();
    const auto it = doc.find(key);
    return it == doc.end() ? empty : *it;
  }
};

ConfigFile read_config_file(const std::string& path) {
  ConfigFile file;
  if (path.empty()) return file;
  file.doc = read_json(path);
  if (!file.doc.is_object()) throw DataError(path + ": expected a JSON object");
  for (const auto& [key, value] : file.doc.items()) {
    if (key != "config" && key != "dataset" && key != "result" && key != "out" &&
        key != "validate") {
      throw DataError(path + ": unknown field '" + key + "'");
    }
  }
  file.base = fs::path(path).parent_path();
  return file;
}

bool has_overrides(const Options& o) {
  return o.alpha_cnf || o.alpha_loc || o.alpha_cls || o.loss_cnf || o.loss_loc ||
         o.loss_cls || o.loss_loc_tau || o.loss_cls_tau || o.predset_loc ||
         o.predset_cls || o.match || o.tau || o.prefilter || o.loc_lower ||
         o.loc_upper || o.steps || o.no_correction;
}

template <typename T, typename Parse>
void parse_into(const std::optional<std::string>& flag, T& target, Parse parse) {
  if (!flag) return;
  try {
    target = parse(*flag);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

CalibrationConfig apply_overrides(CalibrationConfig c, const Options& o) {
  if (o.alpha_cnf) c.alpha_cnf = *o.alpha_cnf;
  if (o.alpha_loc) c.alpha_loc = *o.alpha_loc;
  if (o.alpha_cls) c.alpha_cls = *o.alpha_cls;
  parse_into(o.loss_cnf, c.loss.confidence, parse_confidence_loss_kind);
  parse_into(o.loss_loc, c.loss.localization, parse_localization_loss_kind);
  parse_into(o.loss_cls, c.loss.classification, parse_aggregation);
  if (o.loss_loc_tau) c.loss.localization_tau = *o.loss_loc_tau;
  if (o.loss_cls_tau) c.loss.aggregation_tau = *o.loss_cls_tau;
  parse_into(o.predset_loc, c.predset.localization, parse_localization_set_kind);
  parse_into(o.predset_cls, c.predset.classification, parse_classification_set_kind);
  parse_into(o.match, c.match.kind, parse_match_kind);
  if (o.tau) c.match.tau = *o.tau;
  if (o.prefilter) c.prefilter_threshold = *o.prefilter;
  if (o.loc_lower || o.loc_upper) {
    Interval bounds = c.lambda_loc_bounds.value_or(Interval{0.0, 0.0});
    if (o.loc_lower) bounds.lower = *o.loc_lower;
    if (o.loc_upper) bounds.upper = *o.loc_upper;
    c.lambda_loc_bounds = bounds;
  }
  if (o.steps) c.binary_search_steps = *o.steps;
  if (o.no_correction) c.finite_sample_correction = false;
  return c;
}

CalibrationConfig effective_config(const ConfigFile& file, const Options& o,
                                   CalibrationConfig base = {}) {
  return apply_overrides(config_from_json(file.section("config"), std::move(base)), o);
}

std::string require_path(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw CliFailure(kExitDataError, "usage", std::string("missing ") + flag +
                                                  " (flag or config file field)");
  }
  return value;
}

// Resolves the config to use with a stored result and enforces the digest.
CalibrationConfig checked_config(const CalibrationResult& result, const ConfigFile& file,
                                 const Options& o) {
  const bool explicit_config = file.doc.contains("config") || has_overrides(o);
  if (!explicit_config) return result.config;
  const CalibrationConfig config = effective_config(file, o, result.config);
  try {
    verify_config(result, config);
  } catch (const DigestMismatchError& e) {
    if (!o.allow_mismatch) throw;
    spdlog::warn("{} (continuing: --allow-config-mismatch)", e.what());
  }
  return config;
}

std::string fmt_value(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_calibrate(const Options& o) {
  const ConfigFile file = read_config_file(o.config_path);
  const CalibrationConfig config = effective_config(file, o);
  const std::string dataset = require_path(file.path_or("dataset", o.dataset), "--dataset");
  const std::string out = require_path(file.path_or("out", o.out), "--out");
  const Dataset data = load_dataset(dataset, config.prefilter_threshold);
  const CalibrationResult result = calibrate(data.images, config);
  save_result(result, out);
  const CalibrationDiagnostics& d = result.diagnostics;
  print_table({{"n_calibration", std::to_string(result.n_calibration)},
               {"lambda_cnf_plus", fmt_value(result.lambda_cnf_plus)},
               {"lambda_cnf_minus", fmt_value(result.lambda_cnf_minus)},
               {"lambda_loc_plus", fmt_value(result.lambda_loc_plus)},
               {"lambda_cls_plus", fmt_value(result.lambda_cls_plus)},
               {"risk_cnf", fmt_value(d.risk_cnf)},
               {"risk_loc", fmt_value(d.risk_loc)},
               {"risk_cls", fmt_value(d.risk_cls)},
               {"monotonized_risk_loc", fmt_value(d.monotonized_risk_loc)},
               {"monotonized_risk_cls", fmt_value(d.monotonized_risk_cls)},
               {"breakpoints", std::to_string(d.num_breakpoints)}});
  return kExitOk;
}

int cmd_infer(const Options& o) {
  const ConfigFile file = read_config_file(o.config_path);
  const CalibrationResult result =
      load_result(require_path(file.path_or("result", o.result), "--result"));
  const CalibrationConfig config = checked_config(result, file, o);
  const Dataset data = load_dataset(
      require_path(file.path_or("dataset", o.dataset), "--dataset"), config.prefilter_threshold);
  json predictions = json::array();
  for (const ImageSample& s : data.images) predictions.push_back(prediction_to_json(infer(s, result)));
  const json doc = {{"schema", "seqcrc-predictions"},
                    {"version", 1},
                    {"config", config_to_json(config)},
                    {"config_digest", config_digest(config)},
                    {"predictions", std::move(predictions)}};
  write_json(doc, require_path(file.path_or("out", o.out), "--out"));
  std::cout << "wrote predictions for " << data.images.size() << " images\n";
  return kExitOk;
}

int cmd_evaluate(const Options& o) {
  const ConfigFile file = read_config_file(o.config_path);
  CalibrationResult result =
      load_result(require_path(file.path_or("result", o.result), "--result"));
  result.config = checked_config(result, file, o);
  const Dataset data = load_dataset(
      require_path(file.path_or("dataset", o.dataset), "--dataset"),
      result.config.prefilter_threshold);
  const EvaluationReport r = evaluate(data.images, result);
  print_table({{"n_test", std::to_string(r.n_test)},
               {"risk_cnf", fmt_value(r.risk_cnf)},
               {"risk_loc", fmt_value(r.risk_loc)},
               {"risk_cls", fmt_value(r.risk_cls)},
               {"risk_global", fmt_value(r.risk_global)},
               {"set_size_cnf", fmt_value(r.set_size_cnf)},
               {"set_size_loc", fmt_value(r.set_size_loc)},
               {"set_size_cls", fmt_value(r.set_size_cls)},
               {"images_without_selection", std::to_string(r.images_without_selection)},
               {"zero_area_predictions", std::to_string(r.zero_area_predictions)}});
  const std::string out = file.path_or("out", o.out);
  if (!out.empty()) {
    write_json({{"schema", "seqcrc-evaluation"},
                {"version", 1},
                {"config", config_to_json(result.config)},
                {"lambdas",
                 {{"cnf_plus", result.lambda_cnf_plus},
                  {"loc_plus", result.lambda_loc_plus},
                  {"cls_plus", result.lambda_cls_plus}}},
                {"report", report_to_json(r)}},
               out);
  }
  return kExitOk;
}

int cmd_import_coco(const Options& o) {
  const Dataset data = import_coco(fs::path(require_path(o.gt, "--gt")),
                                   fs::path(require_path(o.detections, "--detections")));
  save_dataset(data, require_path(o.out, "--out"));
  std::size_t gts = 0, dets = 0;
  for (const ImageSample& s : data.images) {
    gts += s.ground_truths.size();
    dets += s.detections.size();
  }
  std::cout << "imported " << data.images.size() << " images, " << gts
            << " ground truths, " << dets << " detections, " << data.num_classes
            << " classes\n";
  return kExitOk;
}

SynthSpec synth_from_json(const json& doc, SynthSpec s = {}) {
  if (!doc.is_object()) throw DataError("synth: expected an object");
  auto num = [&](const char* key, double& target) {
    if (const auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number()) throw DataError(std::string("synth.") + key + " must be a number");
      target = it->get<double>();
    }
  };
  auto integer = [&](const char* key, auto& target) {
    if (const auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number_integer()) {
        throw DataError(std::string("synth.") + key + " must be an integer");
      }
      target = it->get<std::remove_reference_t<decltype(target)>>();
    }
  };
  static const std::vector<std::string> known = {
      "seed", "n_images", "num_classes", "width", "height", "min_objects", "max_objects",
      "min_box_side", "max_box_side", "box_noise_std", "conf_base", "conf_noise_coupling",
      "conf_jitter", "fp_rate", "fp_logit", "label_flip_prob", "logit_noise_std",
      "class_boost", "temperature"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw DataError("synth: unknown field '" + key + "'");
    }
  }
  integer("seed", s.seed);
  integer("n_images", s.n_images);
  integer("num_classes", s.num_classes);
  num("width", s.width);
  num("height", s.height);
  integer("min_objects", s.min_objects);
  integer("max_objects", s.max_objects);
  num("min_box_side", s.min_box_side);
  num("max_box_side", s.max_box_side);
  num("box_noise_std", s.box_noise_std);
  num("conf_base", s.conf_base);
  num("conf_noise_coupling", s.conf_noise_coupling);
  num("conf_jitter", s.conf_jitter);
  num("fp_rate", s.fp_rate);
  num("fp_logit", s.fp_logit);
  num("label_flip_prob", s.label_flip_prob);
  num("logit_noise_std", s.logit_noise_std);
  num("class_boost", s.class_boost);
  num("temperature", s.temperature);
  try {
    validate_spec(s);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  return s;
}

json synth_to_json(const SynthSpec& s) {
  return {{"seed", s.seed},
          {"n_images", s.n_images},
          {"num_classes", s.num_classes},
          {"width", s.width},
          {"height", s.height},
          {"min_objects", s.min_objects},
          {"max_objects", s.max_objects},
          {"min_box_side", s.min_box_side},
          {"max_box_side", s.max_box_side},
          {"box_noise_std", s.box_noise_std},
          {"conf_base", s.conf_base},
          {"conf_noise_coupling", s.conf_noise_coupling},
          {"conf_jitter", s.conf_jitter},
          {"fp_rate", s.fp_rate},
          {"fp_logit", s.fp_logit},
          {"label_flip_prob", s.label_flip_prob},
          {"logit_noise_std", s.logit_noise_std},
          {"class_boost", s.class_boost},
          {"temperature", s.temperature}};
}

json summary_to_json(const RiskSummary& s) {
  return {{"mean", s.mean},
          {"std_error", s.std_error},
          {"fraction_above_alpha", s.fraction_above_alpha},
          {"alpha", s.alpha}};
}

template <typename T>
T setting(const json& section, const char* key, std::optional<T> flag, T fallback) {
  if (flag) return *flag;
  if (const auto it = section.find(key); it != section.end()) {
    try {
      return it->get<T>();
    } catch (const json::exception&) {
      throw DataError(std::string("validate.") + key + " has the wrong type");
    }
  }
  return fallback;
}

int cmd_validate(const Options& o) {
  const ConfigFile file = read_config_file(o.config_path);
  const json& section = file.section("validate");
  const CalibrationConfig config = effective_config(file, o);
  SynthSpec spec = synth_from_json(section.value("synth", json::object()));
  if (o.seed) spec.seed = *o.seed;
  const int trials = setting<int>(section, "trials", o.trials, 100);
  const int n_cal = setting<int>(section, "n_cal", o.n_cal, 500);
  const int n_test = setting<int>(section, "n_test", o.n_test, 500);
  const double slack = setting<double>(section, "slack", o.slack, 0.01);

  const ValidationReport r = monte_carlo_validate(spec, config, trials, n_cal, n_test);
  const bool ok = r.within(slack);

  std::cout << std::left << std::setw(8) << "risk" << std::setw(12) << "mean"
            << std::setw(12) << "std_err" << std::setw(12) << "alpha" << "frac>alpha\n";
  auto row = [](const char* name, const RiskSummary& s) {
    std::cout << std::left << std::setw(8) << name << std::setw(12) << fmt_value(s.mean)
              << std::setw(12) << fmt_value(s.std_error) << std::setw(12)
              << fmt_value(s.alpha) << fmt_value(s.fraction_above_alpha) << '\n';
  };
  row("cnf", r.cnf);
  row("loc", r.loc);
  row("cls", r.cls);
  row("global", r.global);
  std::cout << "trials=" << trials << " n_cal=" << n_cal << " n_test=" << n_test
            << " slack=" << slack << " -> " << (ok ? "within bounds" : "VIOLATION") << '\n';

  const std::string out = file.path_or("out", o.out);
  if (!out.empty()) {
    json per_trial = json::array();
    for (const TrialOutcome& t : r.outcomes) {
      per_trial.push_back({{"seed", t.seed},
                           {"lambda_cnf_plus", t.result.lambda_cnf_plus},
                           {"lambda_cnf_minus", t.result.lambda_cnf_minus},
                           {"lambda_loc_plus", t.result.lambda_loc_plus},
                           {"lambda_cls_plus", t.result.lambda_cls_plus},
                           {"report", report_to_json(t.report)}});
    }
    write_json({{"schema", "seqcrc-validation"},
                {"version", 1},
                {"config", config_to_json(config)},
                {"synth", synth_to_json(spec)},
                {"trials", trials},
                {"n_cal", n_cal},
                {"n_test", n_test},
                {"slack", slack},
                {"within_bounds", ok},
                {"risk",
                 {{"cnf", summary_to_json(r.cnf)},
                  {"loc", summary_to_json(r.loc)},
                  {"cls", summary_to_json(r.cls)},
                  {"global", summary_to_json(r.global)}}},
                {"mean_lambda",
                 {{"cnf_plus", r.mean_lambda_cnf_plus},
                  {"cnf_minus", r.mean_lambda_cnf_minus},
                  {"loc_plus", r.mean_lambda_loc_plus},
                  {"cls_plus", r.mean_lambda_cls_plus}}},
                {"mean_set_size",
                 {{"cnf", r.mean_set_size_cnf},
                  {"loc", r.mean_set_size_loc},
                  {"cls", r.mean_set_size_cls}}},
                {"trial_outcomes", std::move(per_trial)}},
               out);
  }
  if (!ok) {
    throw CliFailure(kExitGuaranteeViolation, "guarantee_violation",
                     "mean test risk exceeds its level by more than slack " + fmt_value(slack));
  }
  return kExitOk;
}

int cmd_synth(const Options& o) {
  const ConfigFile file = read_config_file(o.config_path);
  SynthSpec spec = synth_from_json(file.section("validate").value("synth", json::object()));
  if (o.seed) spec.seed = *o.seed;
  if (o.n_images) spec.n_images = *o.n_images;
  Dataset data;
  data.num_classes = spec.num_classes;
  data.images = generate(spec);
  save_dataset(data, require_path(file.path_or("out", o.out), "--out"));
  std::cout << "generated " << data.images.size() << " images\n";
  return kExitOk;
}

void setup_logging() {
  static bool configured = false;
  if (!configured) {
    auto logger = spdlog::stderr_color_mt("seqcrc");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    configured = true;
  }
  const char* level = std::getenv("SEQCRC_LOG_LEVEL");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::info);
}

int report_failure(int code, const std::string& kind, const std::string& message) {
  std::string flat = message;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  std::cerr << "seqcrc: error=" << kind << " code=" << code << " message=" << flat << '\n';
  return code;
}

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha-cnf", o.alpha_cnf, "Confidence risk level");
  cmd->add_option("--alpha-loc", o.alpha_loc, "Localization risk level");
  cmd->add_option("--alpha-cls", o.alpha_cls, "Classification risk level");
  cmd->add_option("--loss-cnf", o.loss_cnf, "box_count_threshold | box_count_recall");
  cmd->add_option("--loss-loc", o.loss_loc, "thresholded | boxwise | pixelwise");
  cmd->add_option("--loss-loc-tau", o.loss_loc_tau, "Covered fraction for thresholded loss");
  cmd->add_option("--loss-cls", o.loss_cls, "average | max | thresholded");
  cmd->add_option("--loss-cls-tau", o.loss_cls_tau, "Threshold for thresholded aggregation");
  cmd->add_option("--predset-loc", o.predset_loc, "additive | multiplicative");
  cmd->add_option("--predset-cls", o.predset_cls, "lac | aps");
  cmd->add_option("--match", o.match, "hausdorff | lac | giou | mix");
  cmd->add_option("--tau", o.tau, "Classification weight of the mix distance");
  cmd->add_option("--prefilter", o.prefilter, "Drop detections below this confidence");
  cmd->add_option("--loc-lower", o.loc_lower, "Lower end of the localization search");
  cmd->add_option("--loc-upper", o.loc_upper, "Upper end of the localization search");
  cmd->add_option("--steps", o.steps, "Binary search iterations");
  cmd->add_flag("--no-finite-sample-correction", o.no_correction)->group("");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  setup_logging();
  Options o;
  CLI::App app{"Sequential conformal risk control for object detectors", "seqcrc"};
  app.require_subcommand(1);

  auto* calibrate_cmd = app.add_subcommand("calibrate", "Calibrate the four parameters");
  auto* infer_cmd = app.add_subcommand("infer", "Apply a calibration result to detections");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Risks and set sizes on a test set");
  auto* import_cmd = app.add_subcommand("import-coco", "Convert COCO files to the native format");
  auto* validate_cmd = app.add_subcommand("validate", "Monte Carlo check of the risk guarantee");
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset");

  for (auto* cmd : {calibrate_cmd, infer_cmd, evaluate_cmd, validate_cmd, synth_cmd}) {
    cmd->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "Output file");
  }
  for (auto* cmd : {calibrate_cmd, infer_cmd, evaluate_cmd}) {
    cmd->add_option("--dataset", o.dataset, "Native dataset file");
  }
  for (auto* cmd : {infer_cmd, evaluate_cmd}) {
    cmd->add_option("--result", o.result, "Calibration result file");
    cmd->add_flag("--allow-config-mismatch", o.allow_mismatch,
                  "Proceed when the config differs from the calibrated one");
  }
  for (auto* cmd : {calibrate_cmd, infer_cmd, evaluate_cmd, validate_cmd}) {
    add_config_flags(cmd, o);
  }
  validate_cmd->add_option("--seed", o.seed, "Base seed");
  validate_cmd->add_option("--trials", o.trials, "Number of trials");
  validate_cmd->add_option("--n-cal", o.n_cal, "Calibration images per trial");
  validate_cmd->add_option("--n-test", o.n_test, "Test images per trial");
  validate_cmd->add_option("--slack", o.slack, "Allowed excess of a mean risk over its level");
  synth_cmd->add_option("--seed", o.seed, "Seed");
  synth_cmd->add_option("--n-images", o.n_images, "Number of images");
  import_cmd->add_option("--gt", o.gt, "COCO annotation file")->required();
  import_cmd->add_option("--detections", o.detections, "COCO detection results")->required();
  import_cmd->add_option("--out", o.out, "Output dataset file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_failure(kExitDataError, "usage", e.what());
  }

  try {
    if (*calibrate_cmd) return cmd_calibrate(o);
    if (*infer_cmd) return cmd_infer(o);
    if (*evaluate_cmd) return cmd_evaluate(o);
    if (*import_cmd) return cmd_import_coco(o);
    if (*validate_cmd) return cmd_validate(o);
    return cmd_synth(o);
  } catch (const CliFailure& e) {
    return report_failure(e.code(), e.kind(), e.what());
  } catch (const PreconditionError& e) {
    return report_failure(kExitPrecondition, "precondition", e.what());
  } catch (const InfeasibleError& e) {
    return report_failure(kExitInfeasible, "infeasible", e.what());
  } catch (const DigestMismatchError& e) {
    return report_failure(kExitDigestMismatch, "digest_mismatch", e.what());
  } catch (const VersionError& e) {
    return report_failure(kExitDataError, "version", e.what());
  } catch (const DataError& e) {
    return report_failure(kExitDataError, "data", e.what());
  } catch (const std::exception& e) {
    return report_failure(kExitDataError, "internal", e.what());
  }
}

}  // namespace seqcrc
