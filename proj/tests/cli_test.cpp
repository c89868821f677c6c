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

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "seqcrc/dataio.hpp"

namespace seqcrc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "seqcrc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "seqcrc_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ASSERT_EQ(run({"synth", "--seed", "1", "--n-images", "200", "--out", path("data.json")}), kExitOk);
    ASSERT_EQ(run({"calibrate", "--dataset", path("data.json"), "--out", path("result.json"),
                   "--alpha-loc", "0.1", "--alpha-cls", "0.1"}),
              kExitOk);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, CalibrateWritesLoadableResult) {
  const CalibrationResult r = load_result(path("result.json"));
  EXPECT_EQ(r.n_calibration, 200u);
  EXPECT_EQ(r.config.alpha_loc, 0.1);
  EXPECT_LE(r.lambda_cnf_minus, r.lambda_cnf_plus);
}

TEST_F(CliTest, InferWritesOnePredictionPerImage) {
  ASSERT_EQ(run({"infer", "--result", path("result.json"), "--dataset", path("data.json"), "--out",
                 path("pred.json")}),
            kExitOk);
  const json doc = read_json(path("pred.json"));
  EXPECT_EQ(doc["schema"], "seqcrc-predictions");
  EXPECT_EQ(doc["predictions"].size(), 200u);
  EXPECT_EQ(doc["config"]["alpha_loc"], 0.1);
}

TEST_F(CliTest, EvaluateWritesReport) {
  ASSERT_EQ(run({"evaluate", "--result", path("result.json"), "--dataset", path("data.json"), "--out",
                 path("eval.json")}),
            kExitOk);
  const json doc = read_json(path("eval.json"));
  EXPECT_EQ(doc["report"]["n_test"], 200);
}

TEST_F(CliTest, ConfigMismatchIsRefusedUnlessAllowed) {
  testing::internal::CaptureStderr();
  const int code = run({"evaluate", "--result", path("result.json"), "--dataset", path("data.json"),
                        "--alpha-cnf", "0.05"});
  const std::string err = testing::internal::GetCapturedStderr();
  EXPECT_EQ(code, kExitDigestMismatch);
  EXPECT_NE(err.find("seqcrc: error=digest_mismatch code=4 message="), std::string::npos) << err;
  EXPECT_EQ(run({"evaluate", "--result", path("result.json"), "--dataset", path("data.json"),
                 "--alpha-cnf", "0.05", "--allow-config-mismatch"}),
            kExitOk);
  // Restating the calibrated values is not a mismatch.
  EXPECT_EQ(run({"infer", "--result", path("result.json"), "--dataset", path("data.json"), "--out",
                 path("pred2.json"), "--alpha-loc", "0.1"}),
            kExitOk);
}

TEST_F(CliTest, PreconditionViolation) {
  EXPECT_EQ(run({"calibrate", "--dataset", path("data.json"), "--out", path("bad.json"), "--alpha-loc",
                 "0.021"}),
            kExitPrecondition);
  EXPECT_FALSE(fs::exists(path("bad.json")));
}

TEST_F(CliTest, InfeasibleSearch) {
  EXPECT_EQ(run({"calibrate", "--dataset", path("data.json"), "--out", path("inf.json"), "--alpha-loc",
                 "0.1", "--alpha-cls", "0.1", "--loss-loc", "thresholded", "--loc-lower", "0",
                 "--loc-upper", "0.001"}),
            kExitInfeasible);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run({"calibrate", "--dataset", path("missing.json"), "--out", path("x.json")}),
            kExitDataError);
  {
    std::ofstream bad(path("broken.json"));
    bad << "{ not json";
  }
  EXPECT_EQ(run({"calibrate", "--dataset", path("broken.json"), "--out", path("x.json")}),
            kExitDataError);
  EXPECT_EQ(run({"calibrate", "--out", path("x.json")}), kExitDataError);
  EXPECT_EQ(run({"calibrate", "--dataset", path("data.json"), "--out", path("x.json"), "--match",
                 "hungarian"}),
            kExitDataError);
  EXPECT_EQ(run({"frobnicate"}), kExitDataError);
  EXPECT_EQ(run({"import-coco", "--detections", path("d.json"), "--out", path("x.json")}),
            kExitDataError);
}

TEST_F(CliTest, ConfigFileDrivesCalibration) {
  write_json({{"config", {{"alpha_loc", 0.15}, {"alpha_cls", 0.15}, {"match", {{"kind", "hausdorff"}}}}},
              {"dataset", "data.json"},
              {"out", "from_config.json"}},
             path("run.json"));
  ASSERT_EQ(run({"calibrate", "--config", path("run.json")}), kExitOk);
  const CalibrationResult r = load_result(path("from_config.json"));
  EXPECT_EQ(r.config.alpha_loc, 0.15);
  EXPECT_EQ(r.config.match.kind, MatchKind::kHausdorff);

  write_json({{"configuration", json::object()}}, path("typo.json"));
  EXPECT_EQ(run({"calibrate", "--config", path("typo.json")}), kExitDataError);
}

TEST_F(CliTest, ImportCoco) {
  write_json(json::parse(R"({"images": [{"id": 1}], "categories": [{"id": 1, "name": "a"}],
                             "annotations": [{"image_id": 1, "bbox": [0, 0, 4, 4], "category_id": 1}]})"),
             path("gt.json"));
  write_json(json::parse(R"([{"image_id": 1, "bbox": [0, 0, 4, 5], "score": 0.7, "category_id": 1}])"),
             path("det.json"));
  ASSERT_EQ(run({"import-coco", "--gt", path("gt.json"), "--detections", path("det.json"), "--out",
                 path("coco.json")}),
            kExitOk);
  const Dataset d = load_dataset(path("coco.json"));
  ASSERT_EQ(d.images.size(), 1u);
  EXPECT_EQ(d.images[0].detections.at(0).box, (BoundingBox{0, 0, 4, 5}));
}

TEST_F(CliTest, ValidateReportsGuaranteeViolation) {
  const std::vector<std::string> base{"validate", "--seed", "3", "--trials", "2", "--n-cal", "100",
                                      "--n-test", "100", "--alpha-loc", "0.1", "--alpha-cls", "0.1"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  ASSERT_EQ(run(with({"--slack", "1", "--out", path("val.json")})), kExitOk);
  const json doc = read_json(path("val.json"));
  EXPECT_EQ(doc["trial_outcomes"].size(), 2u);
  EXPECT_TRUE(doc["within_bounds"].get<bool>());
  // A negative slack can never be met.
  EXPECT_EQ(run(with({"--slack=-1"})), kExitGuaranteeViolation);
}

}  // namespace
}  // namespace seqcrc
