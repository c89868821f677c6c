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

#include "seqcrc/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include "seqcrc/errors.hpp"

namespace seqcrc {

using nlohmann::json;

namespace {

constexpr double kProbabilitySumTolerance = 1e-4;
constexpr double kSynthesizedEpsilon = 1e-6;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DataError(where + ": " + what);
}

std::string record(const std::string& image_id, const char* kind,
                   std::size_t index) {
  std::ostringstream out;
  out << "image '" << image_id << "' " << kind << " #" << index;
  return out.str();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& value, const std::string& where, const char* name) {
  if (!value.is_number()) fail(where, std::string(name) + " must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) fail(where, std::string(name) + " must be finite");
  return v;
}

BoundingBox box_from(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 4) {
    fail(where, "bbox must be an array of 4 numbers");
  }
  BoundingBox b{number(value[0], where, "bbox"), number(value[1], where, "bbox"),
                number(value[2], where, "bbox"), number(value[3], where, "bbox")};
  if (!b.is_valid()) fail(where, "bbox corners out of order (need x1<=x2, y1<=y2)");
  return b;
}

json box_to(const BoundingBox& b) { return json::array({b.left, b.top, b.right, b.bottom}); }

std::string id_string(const json& id) {
  return id.is_string() ? id.get<std::string>() : id.dump();
}

template <typename Enum, typename Parse>
Enum parse_enum(const json& value, Parse parse, const char* name) {
  if (!value.is_string()) fail("config", std::string(name) + " must be a string");
  try {
    return parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail("config", e.what());
  }
}

Interval interval_from(const json& value, const char* name) {
  if (!value.is_array() || value.size() != 2) {
    fail("config", std::string(name) + " must be [lower, upper]");
  }
  return {number(value[0], "config", name), number(value[1], "config", name)};
}

json interval_to(const Interval& i) { return json::array({i.lower, i.upper}); }

void reject_unknown(const json& obj, std::initializer_list<const char*> keys,
                    const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) ==
        keys.end()) {
      fail(where, "unknown field '" + key + "'");
    }
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Native dataset

Dataset dataset_from_json(const json& doc, double prefilter_threshold) {
  const std::string top = "dataset";
  if (field(doc, "schema", top) != kDatasetSchema) {
    throw VersionError("not a seqcrc dataset (schema field is " +
                       field(doc, "schema", top).dump() + ")");
  }
  const json& version = field(doc, "version", top);
  if (!version.is_number_integer() || version.get<int>() != kDatasetVersion) {
    throw VersionError("unsupported dataset version " + version.dump() +
                       ", expected " + std::to_string(kDatasetVersion));
  }
  Dataset out;
  const json& k = field(doc, "num_classes", top);
  if (!k.is_number_integer() || k.get<int>() < 1) fail(top, "num_classes must be a positive integer");
  out.num_classes = k.get<int>();
  if (const auto it = doc.find("class_names"); it != doc.end()) {
    if (!it->is_array() || it->size() != static_cast<std::size_t>(out.num_classes)) {
      fail(top, "class_names must list num_classes strings");
    }
    for (const json& name : *it) {
      if (!name.is_string()) fail(top, "class_names must list num_classes strings");
      out.class_names.push_back(name.get<std::string>());
    }
  }
  const json& images = field(doc, "images", top);
  if (!images.is_array()) fail(top, "images must be an array");

  const auto num_classes = static_cast<std::size_t>(out.num_classes);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const json& img = images[i];
    const std::string where_img = "image #" + std::to_string(i);
    const json& id = field(img, "image_id", where_img);
    const std::string image_id = id_string(id);
    if (!seen.insert(image_id).second) fail(where_img, "duplicate image_id '" + image_id + "'");

    std::vector<GroundTruth> gts;
    const json& gt_list = field(img, "ground_truths", where_img);
    if (!gt_list.is_array()) fail(where_img, "ground_truths must be an array");
    for (std::size_t j = 0; j < gt_list.size(); ++j) {
      const std::string where = record(image_id, "ground truth", j);
      const json& cls = field(gt_list[j], "class", where);
      if (!cls.is_number_integer() || cls.get<long long>() < 0 ||
          cls.get<long long>() >= out.num_classes) {
        fail(where, "class must be an integer in [0, " + std::to_string(num_classes) + ")");
      }
      gts.push_back({box_from(field(gt_list[j], "bbox", where), where), cls.get<int>()});
    }

    std::vector<Detection> dets;
    const json& det_list = field(img, "detections", where_img);
    if (!det_list.is_array()) fail(where_img, "detections must be an array");
    for (std::size_t j = 0; j < det_list.size(); ++j) {
      const std::string where = record(image_id, "detection", j);
      Detection d;
      d.box = box_from(field(det_list[j], "bbox", where), where);
      d.confidence = number(field(det_list[j], "confidence", where), where, "confidence");
      if (d.confidence < 0.0 || d.confidence > 1.0) fail(where, "confidence must lie in [0, 1]");
      const json& probs = field(det_list[j], "probs", where);
      if (!probs.is_array() || probs.size() != num_classes) {
        fail(where, "probs must have num_classes = " + std::to_string(num_classes) + " entries");
      }
      double sum = 0.0;
      for (const json& p : probs) {
        const double v = number(p, where, "probs");
        if (v < 0.0) fail(where, "probs must be non-negative");
        d.probs.push_back(v);
        sum += v;
      }
      if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
        std::ostringstream msg;
        msg << "probs sum to " << sum << ", expected 1 within " << kProbabilitySumTolerance;
        fail(where, msg.str());
      }
      dets.push_back(std::move(d));
    }

    ImageSample sample = make_image_sample(image_id, std::move(gts), std::move(dets),
                                           prefilter_threshold);
    if (const auto w = img.find("width"); w != img.end()) sample.width = number(*w, where_img, "width");
    if (const auto h = img.find("height"); h != img.end()) sample.height = number(*h, where_img, "height");
    out.images.push_back(std::move(sample));
  }
  return out;
}

json dataset_to_json(const Dataset& dataset) {
  json images = json::array();
  for (const ImageSample& s : dataset.images) {
    json gts = json::array();
    for (const GroundTruth& g : s.ground_truths) {
      gts.push_back({{"bbox", box_to(g.box)}, {"class", g.label}});
    }
    json dets = json::array();
    for (const Detection& d : s.detections) {
      dets.push_back({{"bbox", box_to(d.box)}, {"confidence", d.confidence}, {"probs", d.probs}});
    }
    images.push_back({{"image_id", s.image_id},
                      {"width", s.width},
                      {"height", s.height},
                      {"ground_truths", std::move(gts)},
                      {"detections", std::move(dets)}});
  }
  json doc = {{"schema", kDatasetSchema},
              {"version", kDatasetVersion},
              {"num_classes", dataset.num_classes},
              {"images", std::move(images)}};
  if (!dataset.class_names.empty()) doc["class_names"] = dataset.class_names;
  return doc;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

Dataset load_dataset(const std::filesystem::path& path, double prefilter_threshold) {
  const json doc = read_json(path);
  try {
    return dataset_from_json(doc, prefilter_threshold);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  write_json(dataset_to_json(dataset), path);
}

// ---------------------------------------------------------------------------
// COCO import

Dataset import_coco(const json& annotations, const json& detections) {
  const std::string where_gt = "COCO annotations";
  const json& categories = field(annotations, "categories", where_gt);
  if (!categories.is_array() || categories.empty()) fail(where_gt, "categories must be a non-empty array");
  std::map<long long, std::string> by_id;
  for (const json& c : categories) {
    const json& id = field(c, "id", where_gt);
    if (!id.is_number_integer()) fail(where_gt, "category id must be an integer");
    const auto name = c.find("name");
    by_id[id.get<long long>()] =
        name != c.end() && name->is_string() ? name->get<std::string>() : id.dump();
  }
  Dataset out;
  out.num_classes = static_cast<int>(by_id.size());
  std::map<long long, int> dense;
  for (const auto& [id, name] : by_id) {
    dense[id] = static_cast<int>(out.class_names.size());
    out.class_names.push_back(name);
  }
  const auto num_classes = static_cast<std::size_t>(out.num_classes);

  std::vector<std::string> order;
  std::map<std::string, ImageSample> images;
  const json& image_list = field(annotations, "images", where_gt);
  if (!image_list.is_array()) fail(where_gt, "images must be an array");
  for (const json& img : image_list) {
    const std::string id = id_string(field(img, "id", where_gt));
    ImageSample s;
    s.image_id = id;
    if (const auto w = img.find("width"); w != img.end()) s.width = number(*w, where_gt, "width");
    if (const auto h = img.find("height"); h != img.end()) s.height = number(*h, where_gt, "height");
    if (images.emplace(id, std::move(s)).second) order.push_back(id);
  }

  auto category = [&](const json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where, "category_id must be an integer");
    const auto it = dense.find(value.get<long long>());
    if (it == dense.end()) fail(where, "unknown category id " + value.dump());
    return it->second;
  };
  auto xywh = [&](const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 4) fail(where, "bbox must be [x, y, w, h]");
    const double x = number(value[0], where, "bbox"), y = number(value[1], where, "bbox");
    const double w = number(value[2], where, "bbox"), h = number(value[3], where, "bbox");
    if (w < 0.0 || h < 0.0) fail(where, "bbox width and height must be non-negative");
    return BoundingBox::from_xywh(x, y, w, h);
  };
  auto image_for = [&](const std::string& id) -> ImageSample& {
    auto [it, inserted] = images.try_emplace(id);
    if (inserted) {
      it->second.image_id = id;
      order.push_back(id);
    }
    return it->second;
  };

  const json& anns = field(annotations, "annotations", where_gt);
  if (!anns.is_array()) fail(where_gt, "annotations must be an array");
  for (std::size_t j = 0; j < anns.size(); ++j) {
    const std::string where = "annotation #" + std::to_string(j);
    const std::string id = id_string(field(anns[j], "image_id", where));
    if (images.find(id) == images.end()) fail(where, "refers to unknown image_id " + id);
    image_for(id).ground_truths.push_back(
        {xywh(field(anns[j], "bbox", where), where),
         category(field(anns[j], "category_id", where), where)});
  }

  if (!detections.is_array()) fail("COCO detections", "expected an array of results");
  std::size_t synthesized = 0, renormalized = 0;
  for (std::size_t j = 0; j < detections.size(); ++j) {
    const json& r = detections[j];
    const std::string where = "detection result #" + std::to_string(j);
    const std::string id = id_string(field(r, "image_id", where));
    Detection d;
    d.box = xywh(field(r, "bbox", where), where);
    d.confidence = number(field(r, "score", where), where, "score");
    if (d.confidence < 0.0 || d.confidence > 1.0) fail(where, "score must lie in [0, 1]");
    const int label = category(field(r, "category_id", where), where);
    if (const auto scores = r.find("scores"); scores != r.end()) {
      if (!scores->is_array() || scores->size() != num_classes) {
        fail(where, "scores must have one entry per category (" + std::to_string(num_classes) + ")");
      }
      double sum = 0.0;
      for (const json& p : *scores) {
        const double v = number(p, where, "scores");
        if (v < 0.0) fail(where, "scores must be non-negative");
        d.probs.push_back(v);
        sum += v;
      }
      if (!(sum > 0.0)) fail(where, "scores sum to zero");
      if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
        for (double& p : d.probs) p /= sum;
        ++renormalized;
      }
    } else {
      const double rest = num_classes > 1
                              ? kSynthesizedEpsilon / static_cast<double>(num_classes - 1)
                              : 0.0;
      d.probs.assign(num_classes, rest);
      d.probs[static_cast<std::size_t>(label)] = num_classes > 1 ? 1.0 - kSynthesizedEpsilon : 1.0;
      ++synthesized;
    }
    image_for(id).detections.push_back(std::move(d));
  }

  if (synthesized > 0) {
    out.warnings.push_back(
        std::to_string(synthesized) +
        " detections have no per-class scores; synthesized near one-hot probability "
        "vectors, so LAC/APS class sets are degenerate for them");
    spdlog::warn("{}", out.warnings.back());
  }
  if (renormalized > 0) {
    out.warnings.push_back(std::to_string(renormalized) +
                           " score vectors did not sum to 1 and were renormalized");
    spdlog::warn("{}", out.warnings.back());
  }
  for (const std::string& id : order) {
    ImageSample& s = images[id];
    sort_detections(s.detections);
    out.images.push_back(std::move(s));
  }
  return out;
}

Dataset import_coco(const std::filesystem::path& gt_path,
                    const std::filesystem::path& det_path) {
  return import_coco(read_json(gt_path), read_json(det_path));
}

// ---------------------------------------------------------------------------
// Config and results

json config_to_json(const CalibrationConfig& c) {
  return {
      {"alpha_cnf", c.alpha_cnf},
      {"alpha_loc", c.alpha_loc},
      {"alpha_cls", c.alpha_cls},
      {"loss",
       {{"confidence", to_string(c.loss.confidence)},
        {"localization", to_string(c.loss.localization)},
        {"localization_tau", c.loss.localization_tau},
        {"classification", to_string(c.loss.classification)},
        {"aggregation_tau", c.loss.aggregation_tau}}},
      {"predset",
       {{"localization", to_string(c.predset.localization)},
        {"classification", to_string(c.predset.classification)}}},
      {"match", {{"kind", to_string(c.match.kind)}, {"tau", c.match.tau}}},
      {"lambda_loc_bounds", c.lambda_loc_bounds ? interval_to(*c.lambda_loc_bounds) : json(nullptr)},
      {"lambda_cls_bounds", interval_to(c.lambda_cls_bounds)},
      {"binary_search_steps", c.binary_search_steps},
      {"prefilter_threshold", c.prefilter_threshold},
      {"finite_sample_correction", c.finite_sample_correction},
  };
}

CalibrationConfig config_from_json(const json& doc, CalibrationConfig c) {
  if (!doc.is_object()) fail("config", "expected an object");
  reject_unknown(doc,
                 {"alpha_cnf", "alpha_loc", "alpha_cls", "loss", "predset", "match",
                  "lambda_loc_bounds", "lambda_cls_bounds", "binary_search_steps",
                  "prefilter_threshold", "finite_sample_correction"},
                 "config");
  auto num = [&](const json& obj, const char* key, double& target) {
    if (const auto it = obj.find(key); it != obj.end()) target = number(*it, "config", key);
  };
  num(doc, "alpha_cnf", c.alpha_cnf);
  num(doc, "alpha_loc", c.alpha_loc);
  num(doc, "alpha_cls", c.alpha_cls);
  num(doc, "prefilter_threshold", c.prefilter_threshold);
  if (const auto it = doc.find("loss"); it != doc.end()) {
    reject_unknown(*it, {"confidence", "localization", "localization_tau", "classification",
                         "aggregation_tau"},
                   "config.loss");
    if (const auto v = it->find("confidence"); v != it->end()) {
      c.loss.confidence = parse_enum<ConfidenceLossKind>(*v, parse_confidence_loss_kind, "loss.confidence");
    }
    if (const auto v = it->find("localization"); v != it->end()) {
      c.loss.localization =
          parse_enum<LocalizationLossKind>(*v, parse_localization_loss_kind, "loss.localization");
    }
    if (const auto v = it->find("classification"); v != it->end()) {
      c.loss.classification = parse_enum<Aggregation>(*v, parse_aggregation, "loss.classification");
    }
    num(*it, "localization_tau", c.loss.localization_tau);
    num(*it, "aggregation_tau", c.loss.aggregation_tau);
  }
  if (const auto it = doc.find("predset"); it != doc.end()) {
    reject_unknown(*it, {"localization", "classification"}, "config.predset");
    if (const auto v = it->find("localization"); v != it->end()) {
      c.predset.localization =
          parse_enum<LocalizationSetKind>(*v, parse_localization_set_kind, "predset.localization");
    }
    if (const auto v = it->find("classification"); v != it->end()) {
      c.predset.classification = parse_enum<ClassificationSetKind>(
          *v, parse_classification_set_kind, "predset.classification");
    }
  }
  if (const auto it = doc.find("match"); it != doc.end()) {
    reject_unknown(*it, {"kind", "tau"}, "config.match");
    if (const auto v = it->find("kind"); v != it->end()) {
      c.match.kind = parse_enum<MatchKind>(*v, parse_match_kind, "match.kind");
    }
    num(*it, "tau", c.match.tau);
  }
  if (const auto it = doc.find("lambda_loc_bounds"); it != doc.end()) {
    c.lambda_loc_bounds = it->is_null() ? std::nullopt
                                        : std::optional(interval_from(*it, "lambda_loc_bounds"));
  }
  if (const auto it = doc.find("lambda_cls_bounds"); it != doc.end()) {
    c.lambda_cls_bounds = interval_from(*it, "lambda_cls_bounds");
  }
  if (const auto it = doc.find("binary_search_steps"); it != doc.end()) {
    if (!it->is_number_integer()) fail("config", "binary_search_steps must be an integer");
    c.binary_search_steps = it->get<int>();
  }
  if (const auto it = doc.find("finite_sample_correction"); it != doc.end()) {
    if (!it->is_boolean()) fail("config", "finite_sample_correction must be a boolean");
    c.finite_sample_correction = it->get<bool>();
  }
  return c;
}

std::string config_digest(const CalibrationConfig& config) {
  // nlohmann::json orders object keys, so dump() is canonical.
  return sha256_hex(config_to_json(config).dump());
}

json result_to_json(const CalibrationResult& r) {
  const CalibrationDiagnostics& d = r.diagnostics;
  return {
      {"schema", kResultSchema},
      {"version", kResultVersion},
      {"lambda_cnf_plus", r.lambda_cnf_plus},
      {"lambda_cnf_minus", r.lambda_cnf_minus},
      {"lambda_loc_plus", r.lambda_loc_plus},
      {"lambda_cls_plus", r.lambda_cls_plus},
      {"n_calibration", r.n_calibration},
      {"config", config_to_json(r.config)},
      {"config_digest", config_digest(r.config)},
      {"diagnostics",
       {{"risk_cnf", d.risk_cnf},
        {"risk_loc", d.risk_loc},
        {"risk_cls", d.risk_cls},
        {"monotonized_risk_loc", d.monotonized_risk_loc},
        {"monotonized_risk_cls", d.monotonized_risk_cls},
        {"lambda_loc_bounds", interval_to(d.lambda_loc_bounds)},
        {"lambda_cls_bounds", interval_to(d.lambda_cls_bounds)},
        {"num_breakpoints", d.num_breakpoints}}},
  };
}

CalibrationResult result_from_json(const json& doc) {
  const std::string top = "calibration result";
  if (!doc.is_object() || doc.value("schema", json()) != kResultSchema) {
    throw VersionError("not a seqcrc calibration result");
  }
  const json& version = field(doc, "version", top);
  if (!version.is_number_integer() || version.get<int>() != kResultVersion) {
    throw VersionError("unsupported calibration result version " + version.dump() +
                       ", expected " + std::to_string(kResultVersion));
  }
  CalibrationResult r;
  r.lambda_cnf_plus = number(field(doc, "lambda_cnf_plus", top), top, "lambda_cnf_plus");
  r.lambda_cnf_minus = number(field(doc, "lambda_cnf_minus", top), top, "lambda_cnf_minus");
  r.lambda_loc_plus = number(field(doc, "lambda_loc_plus", top), top, "lambda_loc_plus");
  r.lambda_cls_plus = number(field(doc, "lambda_cls_plus", top), top, "lambda_cls_plus");
  const json& n = field(doc, "n_calibration", top);
  if (!n.is_number_unsigned()) fail(top, "n_calibration must be a non-negative integer");
  r.n_calibration = n.get<std::size_t>();
  r.config = config_from_json(field(doc, "config", top));
  const json& digest = field(doc, "config_digest", top);
  if (!digest.is_string() || digest.get<std::string>() != config_digest(r.config)) {
    throw DigestMismatchError("stored config digest does not match the stored config");
  }
  if (const auto it = doc.find("diagnostics"); it != doc.end() && it->is_object()) {
    CalibrationDiagnostics& d = r.diagnostics;
    const std::string where = "diagnostics";
    d.risk_cnf = number(field(*it, "risk_cnf", where), where, "risk_cnf");
    d.risk_loc = number(field(*it, "risk_loc", where), where, "risk_loc");
    d.risk_cls = number(field(*it, "risk_cls", where), where, "risk_cls");
    d.monotonized_risk_loc =
        number(field(*it, "monotonized_risk_loc", where), where, "monotonized_risk_loc");
    d.monotonized_risk_cls =
        number(field(*it, "monotonized_risk_cls", where), where, "monotonized_risk_cls");
    d.lambda_loc_bounds = interval_from(field(*it, "lambda_loc_bounds", where), "lambda_loc_bounds");
    d.lambda_cls_bounds = interval_from(field(*it, "lambda_cls_bounds", where), "lambda_cls_bounds");
    d.num_breakpoints = field(*it, "num_breakpoints", where).get<std::size_t>();
  }
  return r;
}

void save_result(const CalibrationResult& result, const std::filesystem::path& path) {
  write_json(result_to_json(result), path);
}

CalibrationResult load_result(const std::filesystem::path& path) {
  return result_from_json(read_json(path));
}

void verify_config(const CalibrationResult& result, const CalibrationConfig& config) {
  const std::string expected = config_digest(result.config);
  const std::string actual = config_digest(config);
  if (expected != actual) {
    throw DigestMismatchError("config digest " + actual.substr(0, 12) +
                              " differs from the calibrated config " +
                              expected.substr(0, 12));
  }
}

json prediction_to_json(const ConformalPrediction& p) {
  json objects = json::array();
  for (const PredictedObject& o : p.objects) {
    objects.push_back({{"detection_index", o.detection_index},
                       {"confidence", o.confidence},
                       {"bbox", box_to(o.box)},
                       {"margined_bbox", box_to(o.margined_box)},
                       {"labels", o.labels}});
  }
  return {{"image_id", p.image_id},
          {"lambda_cnf", p.lambda_cnf},
          {"lambda_loc", p.lambda_loc},
          {"lambda_cls", p.lambda_cls},
          {"objects", std::move(objects)}};
}

json report_to_json(const EvaluationReport& r) {
  return {{"n_test", r.n_test},
          {"risk_cnf", r.risk_cnf},
          {"risk_loc", r.risk_loc},
          {"risk_cls", r.risk_cls},
          {"risk_global", r.risk_global},
          {"set_size_cnf", r.set_size_cnf},
          {"set_size_loc", r.set_size_loc},
          {"set_size_cls", r.set_size_cls},
          {"images_without_selection", r.images_without_selection},
          {"zero_area_predictions", r.zero_area_predictions}};
}

}  // namespace seqcrc
