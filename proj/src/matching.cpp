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

#include <stdexcept>
#include <string>

namespace seqcrc {

std::string_view to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::kHausdorff: return "hausdorff";
    case MatchKind::kLac: return "lac";
    case MatchKind::kGiou: return "giou";
    case MatchKind::kMix: return "mix";
  }
  return "unknown";
}

MatchKind parse_match_kind(std::string_view name) {
  if (name == "hausdorff") return MatchKind::kHausdorff;
  if (name == "lac") return MatchKind::kLac;
  if (name == "giou") return MatchKind::kGiou;
  if (name == "mix") return MatchKind::kMix;
  throw std::invalid_argument("unknown matching distance: " + std::string(name));
}

double lac_distance(ClassLabel true_class, std::span<const double> probs) {
  if (true_class < 0 || static_cast<std::size_t>(true_class) >= probs.size()) {
    throw std::invalid_argument("lac_distance: class " +
                                std::to_string(true_class) +
                                " outside label range of size " +
                                std::to_string(probs.size()));
  }
  return 1.0 - probs[static_cast<std::size_t>(true_class)];
}

double mix_distance(const GroundTruth& gt, const Detection& pred, double tau) {
  return tau * lac_distance(gt.label, pred.probs) +
         (1.0 - tau) * hausdorff_distance(gt.box, pred.box);
}

double match_distance(const GroundTruth& gt, const Detection& pred,
                      const MatchDistanceSpec& spec) {
  switch (spec.kind) {
    case MatchKind::kHausdorff: return hausdorff_distance(gt.box, pred.box);
    case MatchKind::kLac: return lac_distance(gt.label, pred.probs);
    case MatchKind::kGiou: return giou_distance(gt.box, pred.box);
    case MatchKind::kMix: return mix_distance(gt, pred, spec.tau);
  }
  throw std::logic_error("unhandled MatchKind");
}

MatchingAssignment match(std::span<const GroundTruth> gts,
                         std::span<const Detection> preds,
                         const MatchDistanceSpec& spec) {
  MatchingAssignment assignment(gts.size());
  if (preds.empty()) return assignment;
  for (std::size_t j = 0; j < gts.size(); ++j) {
    std::size_t best = 0;
    double best_distance = match_distance(gts[j], preds[0], spec);
    for (std::size_t k = 1; k < preds.size(); ++k) {
      const double d = match_distance(gts[j], preds[k], spec);
      if (d < best_distance) {
        best_distance = d;
        best = k;
      }
    }
    assignment[j] = best;
  }
  return assignment;
}

}  // namespace seqcrc
