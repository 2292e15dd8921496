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

#ifndef CONSTRUAL_TEXT_HPP_
#define CONSTRUAL_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace construal {

std::string_view Trim(std::string_view s);

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> Split(std::string_view s, char sep);

// Splits on runs of spaces and tabs; never yields empty fields.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// Splits text into lines, dropping a trailing '\r' from each. A final line
// without a newline is still returned; a trailing newline adds nothing.
std::vector<std::string_view> Lines(std::string_view text);

bool IsBlankOrComment(std::string_view line);

// Whitespace-plus-punctuation tokenization used when a corpus is created
// from raw text. Apostrophes and hyphens inside words are kept.
std::vector<std::string> Tokenize(std::string_view raw);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace construal

#endif  // CONSTRUAL_TEXT_HPP_
