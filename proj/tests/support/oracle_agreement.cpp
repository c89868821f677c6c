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

#include "support/oracle_agreement.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "oracle/brute_force.hpp"
#include "seqcrc/errors.hpp"

namespace testing_support {

using seqcrc::Task;

namespace {

std::string describe(std::optional<double> v) {
  if (!v) return "infeasible";
  std::ostringstream out;
  out.precision(17);
  out << *v;
  return out.str();
}

}  // namespace

Agreement compare_with_oracle(const OracleInstance& inst) {
  const auto& samples = inst.samples;
  const auto& config = inst.config;
  Agreement out;
  auto disagree = [&](const std::string& what, std::optional<double> impl,
                      std::optional<double> ref) {
    out.ok = false;
    out.detail = what + ": library=" + describe(impl) + " oracle=" + describe(ref);
  };

  const seqcrc::ConfidenceParameters impl = seqcrc::seqcrc_step1(samples, config);
  const oracle::Step1 ref = oracle::step1(samples, config, 1000);
  const double tol1 = kOracleGrid + 1e-12;
  if (std::abs(impl.plus - ref.plus) > tol1) {
    disagree("lambda_cnf_plus", impl.plus, ref.plus);
    return out;
  }
  if (std::abs(impl.minus - ref.minus) > tol1) {
    disagree("lambda_cnf_minus", impl.minus, ref.minus);
    return out;
  }

  for (Task task : {Task::kLocalization, Task::kClassification}) {
    const seqcrc::Interval bounds = task == Task::kLocalization
                                        ? seqcrc::localization_bounds(samples, config)
                                        : config.lambda_cls_bounds;
    std::optional<double> lib;
    try {
      lib = seqcrc::seqcrc_step2(samples, impl.minus, task, config);
    } catch (const seqcrc::InfeasibleError&) {
    }
    const std::optional<double> grid = oracle::step2(samples, impl.minus, task, config,
                                                     bounds.lower, bounds.upper, kOracleGrid);
    const double width = bounds.upper - bounds.lower;
    const double resolution = width * std::ldexp(1.0, -config.binary_search_steps);
    const double tol2 = kOracleGrid + resolution + 1e-9 * (1.0 + bounds.upper);
    const std::string name = std::string("lambda_") +
                             (task == Task::kLocalization ? "loc" : "cls") + "_plus";
    if (lib && grid) {
      if (std::abs(*lib - *grid) > tol2) disagree(name, lib, grid);
    } else if (lib || grid) {
      // Only the very top of the range can separate the two searches.
      const double found = lib ? *lib : *grid;
      if (found < bounds.upper - tol2) disagree(name, lib, grid);
    }
    if (!out.ok) return out;
  }
  return out;
}

}  // namespace testing_support
