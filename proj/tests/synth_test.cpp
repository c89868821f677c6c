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
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "seqcrc/geometry.hpp"

namespace seqcrc {
namespace {

TEST(Generate, DeterministicInSeed) {
  SynthSpec spec;
  spec.n_images = 50;
  spec.seed = 17;
  EXPECT_EQ(generate(spec), generate(spec));
  SynthSpec other = spec;
  other.seed = 18;
  EXPECT_NE(generate(spec), generate(other));
}

TEST(Generate, RespectsStructuralInvariants) {
  SynthSpec spec;
  spec.n_images = 300;
  spec.seed = 3;
  const auto images = generate(spec);
  ASSERT_EQ(images.size(), 300u);
  std::set<std::string> ids;
  for (const ImageSample& s : images) {
    ids.insert(s.image_id);
    EXPECT_EQ(s.width, spec.width);
    EXPECT_EQ(s.height, spec.height);
    EXPECT_LE(s.ground_truths.size(), static_cast<std::size_t>(spec.max_objects));
    EXPECT_GE(s.detections.size(), std::max<std::size_t>(1, s.ground_truths.size()));
    for (std::size_t j = 1; j < s.detections.size(); ++j) {
      EXPECT_GE(s.detections[j - 1].confidence, s.detections[j].confidence);
    }
    for (const Detection& d : s.detections) {
      EXPECT_GE(d.box.left, 0.0);
      EXPECT_GE(d.box.top, 0.0);
      EXPECT_LE(d.box.right, spec.width);
      EXPECT_LE(d.box.bottom, spec.height);
      EXPECT_TRUE(d.box.is_valid());
      EXPECT_GE(d.confidence, 0.005);
      EXPECT_LE(d.confidence, 0.995);
      ASSERT_EQ(d.probs.size(), static_cast<std::size_t>(spec.num_classes));
      EXPECT_NEAR(std::accumulate(d.probs.begin(), d.probs.end(), 0.0), 1.0, 1e-9);
    }
    for (const GroundTruth& g : s.ground_truths) {
      EXPECT_GE(g.label, 0);
      EXPECT_LT(g.label, spec.num_classes);
    }
  }
  EXPECT_EQ(ids.size(), images.size());
}

TEST(Generate, ValidatesSpec) {
  SynthSpec spec;
  spec.min_objects = 5;
  spec.max_objects = 2;
  EXPECT_THROW(validate_spec(spec), std::invalid_argument);
  spec = {};
  spec.box_noise_std = -1;
  EXPECT_THROW(validate_spec(spec), std::invalid_argument);
  spec = {};
  spec.num_classes = 0;
  EXPECT_THROW(validate_spec(spec), std::invalid_argument);
  EXPECT_NO_THROW(validate_spec(SynthSpec{}));
}

TEST(Generate, NoiselessLimitCoversEveryObject) {
  SynthSpec spec;
  spec.n_images = 200;
  spec.min_objects = 1;
  spec.box_noise_std = 0.0;
  spec.label_flip_prob = 0.0;
  spec.fp_rate = 0.0;
  spec.logit_noise_std = 0.0;
  for (const ImageSample& s : generate(spec)) {
    ASSERT_EQ(s.detections.size(), s.ground_truths.size());
    for (const GroundTruth& g : s.ground_truths) {
      const auto twin = std::find_if(s.detections.begin(), s.detections.end(),
                                     [&](const Detection& d) { return d.box == g.box; });
      ASSERT_NE(twin, s.detections.end());
      const auto top = std::max_element(twin->probs.begin(), twin->probs.end()) - twin->probs.begin();
      EXPECT_EQ(top, g.label);
    }
  }
}

// Scaling the corner noise down leaves every random draw (and therefore every
// confidence and the detection order) unchanged, which identifies each
// object's generated twin.
TEST(Generate, TwinIsUsuallyTheNearestDetection) {
  SynthSpec noisy;
  noisy.n_images = 1000;
  noisy.seed = 12;
  noisy.max_objects = 2;  // low density
  SynthSpec faint = noisy;
  faint.box_noise_std = 1e-9;
  const auto a = generate(noisy), b = generate(faint);
  int objects = 0, nearest_is_twin = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].ground_truths, b[i].ground_truths);
    ASSERT_EQ(a[i].detections.size(), b[i].detections.size());
    for (const GroundTruth& g : a[i].ground_truths) {
      std::size_t twin = 0, nearest = 0;
      for (std::size_t k = 0; k < b[i].detections.size(); ++k) {
        if (std::abs(hausdorff_distance(g.box, b[i].detections[k].box)) < 1e-6) twin = k;
        if (hausdorff_distance(g.box, a[i].detections[k].box) <
            hausdorff_distance(g.box, a[i].detections[nearest].box)) {
          nearest = k;
        }
      }
      ++objects;
      nearest_is_twin += nearest == twin;
    }
  }
  ASSERT_GT(objects, 500);
  EXPECT_GE(nearest_is_twin, 0.99 * objects) << nearest_is_twin << " of " << objects;
}

TEST(DeriveSeed, DistinctPerTrial) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.insert(derive_seed(5, t));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
  EXPECT_NE(derive_seed(5, 3), derive_seed(6, 3));
}

CalibrationConfig harness_config() {
  CalibrationConfig c;
  c.alpha_cnf = 0.02;
  c.alpha_loc = c.alpha_cls = 0.1;
  return c;
}

TEST(MonteCarlo, SmallRunIsReproducibleAndOrderInvariant) {
  SynthSpec spec;
  spec.seed = 77;
  const CalibrationConfig config = harness_config();
  const ValidationReport a = monte_carlo_validate(spec, config, 6, 150, 150);
  const ValidationReport b = monte_carlo_validate(spec, config, 6, 150, 150);
  ASSERT_EQ(a.outcomes.size(), 6u);
  EXPECT_EQ(a.loc.mean, b.loc.mean);
  EXPECT_EQ(a.mean_lambda_cnf_plus, b.mean_lambda_cnf_plus);
  EXPECT_EQ(a.outcomes[2].seed, derive_seed(77, 2));

  ValidationReport shuffled = a;
  std::reverse(shuffled.outcomes.begin(), shuffled.outcomes.end());
  std::swap(shuffled.outcomes[0], shuffled.outcomes[3]);
  summarize(shuffled, config);
  EXPECT_EQ(shuffled.cnf.mean, a.cnf.mean);
  EXPECT_EQ(shuffled.loc.mean, a.loc.mean);
  EXPECT_EQ(shuffled.cls.mean, a.cls.mean);
  EXPECT_EQ(shuffled.global.mean, a.global.mean);
  EXPECT_EQ(shuffled.loc.std_error, a.loc.std_error);
  EXPECT_EQ(shuffled.mean_set_size_loc, a.mean_set_size_loc);
  EXPECT_EQ(a.global.alpha, config.alpha_loc + config.alpha_cls);
}

TEST(MonteCarlo, SummaryMatchesHandComputation) {
  ValidationReport r;
  for (double v : {0.1, 0.3}) {
    TrialOutcome o;
    o.report.risk_cnf = v;
    o.report.risk_loc = v;
    o.report.risk_cls = v;
    o.report.risk_global = v;
    o.result.lambda_cnf_plus = v;
    r.outcomes.push_back(o);
  }
  CalibrationConfig config = harness_config();
  config.alpha_loc = 0.2;
  summarize(r, config);
  EXPECT_DOUBLE_EQ(r.loc.mean, 0.2);
  EXPECT_DOUBLE_EQ(r.loc.std_error, std::sqrt(0.02 / 2.0));  // sample var 0.02
  EXPECT_DOUBLE_EQ(r.loc.fraction_above_alpha, 0.5);
  EXPECT_DOUBLE_EQ(r.mean_lambda_cnf_plus, 0.2);
  EXPECT_TRUE(r.within(0.0) == false);
}

}  // namespace
}  // namespace seqcrc
