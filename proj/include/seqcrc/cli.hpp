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

#pragma once

namespace seqcrc {

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,  // I/O, parse, schema, usage
  kExitPrecondition = 2,
  kExitInfeasible = 3,
  kExitDigestMismatch = 4,
  kExitGuaranteeViolation = 5,
};

/// Entry point of the `seqcrc` command. Failures are reported as a single
/// line on stderr:  seqcrc: error=<kind> code=<exit code> message=<text>
int run_cli(int argc, const char* const* argv);

}  // namespace seqcrc
