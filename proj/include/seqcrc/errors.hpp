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

#include <stdexcept>
#include <string>

namespace seqcrc {

// Base for every error the library raises on purpose. Argument misuse that
// indicates a programming error (negative margins, bad labels) is reported
// with std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failures and schema violations in input files.
class DataError : public Error {
 public:
  using Error::Error;
};

// The risk-level precondition alpha_task >= alpha_cnf + B/(n+1) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// No parameter in the search domain satisfies the risk constraint.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A stored calibration result does not match the configuration it is used with.
class DigestMismatchError : public Error {
 public:
  using Error::Error;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

// Geometric operation undefined for the given (degenerate) input.
class DegenerateBoxError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqcrc
