/* Copyright 2026 The Construal Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CONSTRUAL_ERROR_HPP_
#define CONSTRUAL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace construal {

enum class ErrorCode {
  kSyntax,
  kIo,
  kDuplicateLabel,
  kUnknownLabel,
  kUnknownParent,
  kCycle,
  kNoRoots,
  kInvalidRevision,
  kDanglingParent,
  kRepeatedFunction,
  kDuplicateEntry,
  kMalformedRecord,
  kUnknownDocument,
  kSpanOutOfRange,
  kDuplicateRecord,
  kLabelInUse,
  kNoCommonTargets,
  kGoldExists,
  kNotFound,
  kEmptyGold,
  kUnknownAnnotator,
  kUnknownTask,
  kTaskNotAssigned,
  kTaskClosed,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for errors caused by malformed input text rather than by content that
// parses but violates a rule of the scheme.
bool IsParseError(ErrorCode code);

// All toolkit failures are reported through this exception. `line` is the
// 1-based source line when the error came from a file, otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  // The message without the "line N: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  int line_;
  std::string detail_;
};

}  // namespace construal

#endif  // CONSTRUAL_ERROR_HPP_
