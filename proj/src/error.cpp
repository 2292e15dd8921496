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

#include "construal/error.hpp"

namespace construal {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kDuplicateLabel: return "duplicate-label";
    case ErrorCode::kUnknownLabel: return "unknown-label";
    case ErrorCode::kUnknownParent: return "unknown-parent";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kNoRoots: return "no-roots";
    case ErrorCode::kInvalidRevision: return "invalid-revision";
    case ErrorCode::kDanglingParent: return "dangling-parent";
    case ErrorCode::kRepeatedFunction: return "repeated-function";
    case ErrorCode::kDuplicateEntry: return "duplicate-entry";
    case ErrorCode::kMalformedRecord: return "malformed-record";
    case ErrorCode::kUnknownDocument: return "unknown-document";
    case ErrorCode::kSpanOutOfRange: return "span-out-of-range";
    case ErrorCode::kDuplicateRecord: return "duplicate-record";
    case ErrorCode::kLabelInUse: return "label-in-use";
    case ErrorCode::kNoCommonTargets: return "no-common-targets";
    case ErrorCode::kGoldExists: return "gold-exists";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kEmptyGold: return "empty-gold";
    case ErrorCode::kUnknownAnnotator: return "unknown-annotator";
    case ErrorCode::kUnknownTask: return "unknown-task";
    case ErrorCode::kTaskNotAssigned: return "task-not-assigned";
    case ErrorCode::kTaskClosed: return "task-closed";
  }
  return "unknown";
}

bool IsParseError(ErrorCode code) {
  return code == ErrorCode::kSyntax || code == ErrorCode::kIo ||
         code == ErrorCode::kMalformedRecord;
}

namespace {

std::string WithLine(const std::string& message, int line) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(WithLine(message, line)),
      code_(code),
      line_(line),
      detail_(message) {}

}  // namespace construal
