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

#include "seqcrc/predsets.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "support/random_instances.hpp"

namespace seqcrc {
namespace {

using testing_support::random_box;
using testing_support::random_probs;
using testing_support::random_sample;
using testing_support::Rng;
using testing_support::uniform;

ImageSample with_confidences(std::vector<double> confs) {
  std::vector<Detection> dets;
  for (double c : confs) dets.push_back({{0, 0, 1, 1}, {1.0}, c});
  return make_image_sample("x", {}, std::move(dets));
}

bool subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(SelectConfident, Examples) {
  EXPECT_EQ(select_confident(with_confidences({0.9, 0.6, 0.4}), 1.0).size(), 3u);
  EXPECT_EQ(select_confident(with_confidences({0.9, 0.6, 0.4}), 0.5),
            (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(select_confident(with_confidences({0.9, 0.6, 0.0}), 1.0).size(), 3u);
}

TEST(SelectConfident, BoundaryConfidenceIsKept) {
  // Threshold 1 - 0.4 = 0.6 and the comparison is non-strict.
  EXPECT_EQ(select_confident(with_confidences({0.9, 0.6}), 0.4),
            (std::vector<std::size_t>{0, 1}));
  // Every breakpoint 1 - c keeps the detection that defines it.
  Rng rng(1);
  for (int t = 0; t < 5000; ++t) {
    const double c = uniform(rng, 0.0, 1.0);
    EXPECT_TRUE(passes_confidence(c, 1.0 - c));
  }
}

TEST(LocSetAdditive, Examples) {
  const BoundingBox b{10, 10, 20, 20};
  EXPECT_EQ(loc_set_additive(b, 0.0), b);
  EXPECT_EQ(loc_set_additive(b, 5.0), (BoundingBox{5, 5, 25, 25}));
  EXPECT_THROW(loc_set_additive(b, -1.0), std::invalid_argument);
}

TEST(LocSetMultiplicative, Examples) {
  const BoundingBox b{0, 0, 10, 20};
  EXPECT_EQ(loc_set_multiplicative(b, 0.0), b);
  EXPECT_EQ(loc_set_multiplicative(b, 0.5), (BoundingBox{-5, -10, 15, 30}));
  EXPECT_EQ(loc_set_multiplicative(b, 1.0).width(), 30.0);
  EXPECT_THROW(loc_set_multiplicative(b, std::nan("")), std::invalid_argument);
}

TEST(ClsSetLac, Examples) {
  const std::vector<double> p{0.7, 0.2, 0.1};
  EXPECT_EQ(cls_set_lac(p, 1.0), (LabelSet{0, 1, 2}));
  EXPECT_EQ(cls_set_lac(p, 0.35), (LabelSet{0}));
  EXPECT_EQ(cls_set_lac(p, 0.85), (LabelSet{0, 1}));
}

TEST(ClsSetAps, Examples) {
  EXPECT_EQ(cls_set_aps(std::vector{0.2, 0.5, 0.3}, 0.0), (LabelSet{1}));
  EXPECT_EQ(cls_set_aps(std::vector{0.5, 0.3, 0.2}, 0.6), (LabelSet{0, 1}));
  EXPECT_EQ(cls_set_aps(std::vector{0.5, 0.3, 0.2}, 1.0), (LabelSet{0, 1, 2}));
}

TEST(ClsSetAps, TiesRankByClassIndex) {
  EXPECT_EQ(cls_set_aps(std::vector{0.25, 0.25, 0.25, 0.25}, 0.2), (LabelSet{0}));
  EXPECT_EQ(cls_set_aps(std::vector{0.1, 0.45, 0.45}, 0.3), (LabelSet{1}));
}

TEST(PredSetProperties, SelectionIsNested) {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const ImageSample s = random_sample(rng, 3, 0, 10);
    double a = uniform(rng, 0, 1), b = uniform(rng, 0, 1);
    if (a > b) std::swap(a, b);
    const auto small = select_confident(s, a), large = select_confident(s, b);
    ASSERT_LE(small.size(), large.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
  }
}

TEST(PredSetProperties, LocalizationSetsAreNested) {
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    const BoundingBox box = random_box(rng);
    double a = uniform(rng, 0, 10), b = uniform(rng, 0, 10);
    if (a > b) std::swap(a, b);
    EXPECT_TRUE(contains(loc_set_additive(box, b), loc_set_additive(box, a)));
    EXPECT_TRUE(contains(loc_set_multiplicative(box, b), loc_set_multiplicative(box, a)));
    EXPECT_TRUE(contains(loc_set_additive(box, a), box));
  }
}

TEST(PredSetProperties, ClassificationSetsAreNested) {
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const auto p = random_probs(rng, testing_support::uniform_int(rng, 1, 6));
    double a = uniform(rng, 0, 1), b = uniform(rng, 0, 1);
    if (a > b) std::swap(a, b);
    EXPECT_TRUE(subset(cls_set_lac(p, a), cls_set_lac(p, b)));
    EXPECT_TRUE(subset(cls_set_aps(p, a), cls_set_aps(p, b)));
  }
}

TEST(PredSetProperties, ArgmaxMembership) {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const auto p = random_probs(rng, 4);
    const auto top = static_cast<ClassLabel>(std::max_element(p.begin(), p.end()) - p.begin());
    const double lambda = uniform(rng, 0, 1);
    const LabelSet aps = cls_set_aps(p, lambda);
    EXPECT_TRUE(std::binary_search(aps.begin(), aps.end(), top));
    if (lambda >= 1.0 - p[static_cast<std::size_t>(top)]) {
      const LabelSet lac = cls_set_lac(p, lambda);
      EXPECT_TRUE(std::binary_search(lac.begin(), lac.end(), top));
    }
  }
}

}  // namespace
}  // namespace seqcrc
