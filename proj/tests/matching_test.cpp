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

#include "seqcrc/matching.hpp"

#include <gtest/gtest.h>

#include "seqcrc/geometry.hpp"
#include "support/random_instances.hpp"

namespace seqcrc {
namespace {

using testing_support::random_box;
using testing_support::random_probs;
using testing_support::Rng;

Detection det(BoundingBox box, std::vector<double> probs = {0.5, 0.5}) {
  return {box, std::move(probs), 0.9};
}

TEST(LacDistance, Examples) {
  EXPECT_DOUBLE_EQ(lac_distance(1, std::vector{0.1, 0.7, 0.2}), 0.3);
  EXPECT_EQ(lac_distance(2, std::vector{0.0, 0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(lac_distance(3, std::vector{0.25, 0.25, 0.25, 0.25}), 0.75);
  EXPECT_THROW(lac_distance(3, std::vector{0.5, 0.5}), std::invalid_argument);
}

TEST(MixDistance, Endpoints) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const GroundTruth g{random_box(rng), testing_support::uniform_int(rng, 0, 2)};
    const Detection p = det(random_box(rng), random_probs(rng, 3));
    EXPECT_DOUBLE_EQ(mix_distance(g, p, 0.0), hausdorff_distance(g.box, p.box));
    EXPECT_DOUBLE_EQ(mix_distance(g, p, 1.0), lac_distance(g.label, p.probs));
  }
}

TEST(MixDistance, HandValue) {
  // d_lac = 0.4, d_haus = 8.
  const GroundTruth g{{0, 0, 10, 10}, 0};
  const Detection p = det({8, 0, 10, 10}, {0.6, 0.4});
  EXPECT_DOUBLE_EQ(mix_distance(g, p, 0.25), 6.1);
}

TEST(Match, SingletonAndEmpty) {
  const std::vector<GroundTruth> gts{{{0, 0, 1, 1}, 0}, {{5, 5, 9, 9}, 1}};
  const std::vector<Detection> one{det({50, 50, 60, 60})};
  const MatchingAssignment m = match(gts, one, {});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], 0u);
  EXPECT_EQ(m[1], 0u);

  const MatchingAssignment none = match(gts, std::span<const Detection>{}, {});
  ASSERT_EQ(none.size(), 2u);
  EXPECT_FALSE(none[0]);
  EXPECT_FALSE(none[1]);
}

TEST(Match, TiesGoToLowestIndex) {
  const std::vector<GroundTruth> gts{{{0, 0, 10, 10}, 0}};
  const std::vector<Detection> preds{det({1, 1, 10, 10}), det({1, 1, 10, 10}), det({0, 0, 10, 10})};
  EXPECT_EQ(match(gts, preds, {MatchKind::kHausdorff, 0.0})[0], 2u);
  const std::vector<Detection> tied{det({1, 0, 10, 10}), det({0, 1, 10, 10})};
  EXPECT_EQ(match(gts, tied, {MatchKind::kHausdorff, 0.0})[0], 0u);
}

TEST(Match, AgreesWithExhaustiveArgmin) {
  Rng rng(4);
  for (MatchKind kind : {MatchKind::kHausdorff, MatchKind::kLac, MatchKind::kGiou, MatchKind::kMix}) {
    for (int t = 0; t < 300; ++t) {
      std::vector<GroundTruth> gts;
      std::vector<Detection> preds;
      for (int j = 0; j < 2; ++j) gts.push_back({random_box(rng), testing_support::uniform_int(rng, 0, 3)});
      for (int j = 0; j < 3; ++j) preds.push_back(det(random_box(rng), random_probs(rng, 4)));
      bool degenerate = false;
      for (const auto& p : preds) degenerate |= area(p.box) <= 0;
      for (const auto& g : gts) degenerate |= area(g.box) <= 0;
      if (degenerate && kind == MatchKind::kGiou) continue;
      const MatchDistanceSpec spec{kind, 0.3};
      const MatchingAssignment m = match(gts, preds, spec);
      for (std::size_t j = 0; j < gts.size(); ++j) {
        ASSERT_TRUE(m[j]);
        ASSERT_LT(*m[j], preds.size());
        for (std::size_t k = 0; k < preds.size(); ++k) {
          const double chosen = match_distance(gts[j], preds[*m[j]], spec);
          const double other = match_distance(gts[j], preds[k], spec);
          EXPECT_LE(chosen, other);
          if (k < *m[j]) EXPECT_LT(chosen, other);
        }
      }
    }
  }
}

TEST(Match, FartherAlternativeDoesNotChangeChoice) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::vector<GroundTruth> gts{{random_box(rng), 0}, {random_box(rng), 1}};
    std::vector<Detection> preds{det(random_box(rng), random_probs(rng, 2)),
                                 det(random_box(rng), random_probs(rng, 2))};
    const MatchDistanceSpec spec{MatchKind::kHausdorff, 0.0};
    const MatchingAssignment before = match(gts, preds, spec);
    // Far outside everything: its Hausdorff distance to every gt is huge.
    preds.push_back(det({1e6, 1e6, 1e6 + 1, 1e6 + 1}));
    const MatchingAssignment after = match(gts, preds, spec);
    for (std::size_t j = 0; j < gts.size(); ++j) {
      EXPECT_EQ(match_distance(gts[j], preds[*before[j]], spec),
                match_distance(gts[j], preds[*after[j]], spec));
    }
  }
}

TEST(Match, IgnoresTheUnusedComponent) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const std::vector<GroundTruth> gts{{random_box(rng), 1}};
    std::vector<Detection> preds{det(random_box(rng), random_probs(rng, 3)),
                                 det(random_box(rng), random_probs(rng, 3))};
    const auto haus = match(gts, preds, {MatchKind::kHausdorff, 0.0});
    const auto lac = match(gts, preds, {MatchKind::kLac, 0.0});
    auto reprob = preds;
    for (auto& p : reprob) p.probs = random_probs(rng, 3);
    EXPECT_EQ(match(gts, reprob, {MatchKind::kHausdorff, 0.0}), haus);
    auto rebox = preds;
    for (auto& p : rebox) p.box = random_box(rng);
    EXPECT_EQ(match(gts, rebox, {MatchKind::kLac, 0.0}), lac);
  }
}

TEST(MatchKindNames, RoundTrip) {
  for (MatchKind k : {MatchKind::kHausdorff, MatchKind::kLac, MatchKind::kGiou, MatchKind::kMix}) {
    EXPECT_EQ(parse_match_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_match_kind("hungarian"), std::invalid_argument);
}

}  // namespace
}  // namespace seqcrc
