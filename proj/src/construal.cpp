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

#include "construal/construal.hpp"

#include "construal/error.hpp"
#include "construal/taxonomy.hpp"

namespace construal {

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool IsLabelChar(char c) { return !IsSpace(c) && c != '~' && c != '!'; }

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : text_(text) {}

  Construal Parse() {
    Construal c;
    c.role = Label("role");
    SkipSpace();
    while (pos_ < text_.size() && text_[pos_] == '~') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>') {
        Fail("expected '~>'");
      }
      pos_ += 2;
      c.functions.push_back(Label("function"));
      SkipSpace();
    }
    if (pos_ < text_.size() && text_[pos_] == '!') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != 'm') {
        Fail("expected '!m'");
      }
      pos_ += 2;
      c.metaphoric = true;
      SkipSpace();
    }
    if (pos_ != text_.size()) Fail("unexpected character");
    return c;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  std::string Label(const char* what) {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size() && IsLabelChar(text_[pos_])) ++pos_;
    if (pos_ == start) Fail(std::string("expected ") + what + " label");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntax,
                "construal '" + std::string(text_) + "': " + what +
                    " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Construal ParseConstrual(std::string_view text) {
  return NotationParser(text).Parse();
}

std::string FormatConstrual(const Construal& c) {
  std::string out = c.role;
  for (const auto& f : c.functions) {
    out += "~>";
    out += f;
  }
  if (c.metaphoric) out += "!m";
  return out;
}

void ValidateConstrual(const Hierarchy& h, const Construal& c) {
  if (!h.Contains(c.role)) {
    throw Error(ErrorCode::kUnknownLabel, "unknown role label '" + c.role + "'");
  }
  for (size_t i = 0; i < c.functions.size(); ++i) {
    const auto& f = c.functions[i];
    if (!h.Contains(f)) {
      throw Error(ErrorCode::kUnknownLabel, "unknown function label '" + f + "'");
    }
    if (i > 0 && c.functions[i - 1] == f) {
      throw Error(ErrorCode::kRepeatedFunction,
                  "function '" + f + "' repeats immediately in chain of " +
                      FormatConstrual(c));
    }
  }
}

Construal MakeConstrual(const Hierarchy& h, std::string role,
                        std::vector<std::string> functions, bool metaphoric) {
  Construal c{std::move(role), std::move(functions), metaphoric};
  ValidateConstrual(h, c);
  return c;
}

bool IsCongruent(const Construal& c) {
  return c.functions.size() == 1 && c.functions.front() == c.role;
}

Construal SimplifyChain(const Construal& c, ChainPolicy policy) {
  if (c.functions.size() <= 1) return c;
  Construal out = c;
  if (policy == ChainPolicy::kKeepFirstTwo) {
    out.functions = {c.functions.front()};
  } else {
    out.functions = {c.functions.back()};
  }
  return out;
}

std::string_view ChainPolicyName(ChainPolicy policy) {
  return policy == ChainPolicy::kKeepFirstTwo ? "keep-first-two" : "keep-ends";
}

ChainPolicy ParseChainPolicy(std::string_view name) {
  if (name == "keep-first-two") return ChainPolicy::kKeepFirstTwo;
  if (name == "keep-ends") return ChainPolicy::kKeepEnds;
  throw Error(ErrorCode::kSyntax, "unknown chain policy '" + std::string(name) + "'");
}

}  // namespace construal
