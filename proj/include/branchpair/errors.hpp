// Copyright 2026 The branchpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchpair {

enum class ErrorCode {
  LoopArc,
  DuplicateArcInSimpleDigraph,
  VertexOutOfRange,
  EmptySubset,
  ArcAbsent,
  SyntaxError,
  InconsistentHeader,
  TooFewVertices,
  TooLarge,
  TooSmall,
  NotStrong,
  NotSemicomplete,
  NoSuchCycle,
  RootCannotReachAll,
  BudgetExceeded,
  PreconditionViolated,
  InvalidParameters,
  UnknownClaim,
  ConstructionFailed,
};

std::string_view to_string(ErrorCode code);

/// Base of every error thrown by the library. `code()` identifies the
/// contract violation; `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& message)
      : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace branchpair
