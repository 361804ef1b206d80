// Copyright 2026 The Brauer Factorization Authors
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

#ifndef BRAUER_ERROR_HPP_
#define BRAUER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer {

enum class ErrorCode {
  kParseError,
  kDuplicateNode,
  kUncoveredNode,
  kIndexOutOfRange,
  kSelfLoop,
  kSizeMismatch,
  kEdgeNotInTangle,
  kMergeUndefined,
  kNotASizeOneUpperHook,
  kNotAPermutationTangle,
  kNotPlanar,
  kNoViableMerge,
  kNoViableStep,
  kNoMatch,
  kResourceLimit,
  kInternalError,
};

// Machine-readable name, e.g. "DuplicateNode".
std::string_view error_name(ErrorCode code);

// All domain failures are reported through this exception type; the CLI maps
// it to exit status 1 and prints error_name(code()).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brauer

#endif  // BRAUER_ERROR_HPP_
