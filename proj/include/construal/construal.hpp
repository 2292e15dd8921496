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

#ifndef CONSTRUAL_CONSTRUAL_HPP_
#define CONSTRUAL_CONSTRUAL_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace construal {

class Hierarchy;

// A scene role paired with the chain of functions the adposition codes for.
//
//   functions.empty()      null function: the marker contributes no semantics
//   functions.size() == 1  ordinary Role~>Function construal
//   functions.size() >= 2  multiple construal, each step extending the last
//
// When `metaphoric` is set the role is read in the target domain of the
// metaphor and the functions in its source domain.
struct Construal {
  std::string role;
  std::vector<std::string> functions;
  bool metaphoric = false;

  bool has_null_function() const { return functions.empty(); }
  // First function, or an empty string for a null function.
  std::string_view first_function() const {
    return functions.empty() ? std::string_view{} : functions.front();
  }

  auto operator<=>(const Construal&) const = default;
  bool operator==(const Construal&) const = default;
};

// Parses the ASCII notation `Role~>Function~>Function!m`. Whitespace around
// tokens is ignored. Only syntax is checked here; label existence is checked
// by ValidateConstrual. Syntax errors report the character offset.
Construal ParseConstrual(std::string_view text);

std::string FormatConstrual(const Construal& c);

// Throws kUnknownLabel for labels missing from `h` and kRepeatedFunction when
// a function directly repeats its predecessor in the chain.
void ValidateConstrual(const Hierarchy& h, const Construal& c);

Construal MakeConstrual(const Hierarchy& h, std::string role,
                        std::vector<std::string> functions, bool metaphoric);

// The function chain is exactly [role].
bool IsCongruent(const Construal& c);

enum class ChainPolicy {
  kKeepFirstTwo,  // role plus the first function
  kKeepEnds,      // role plus the last function
};

Construal SimplifyChain(const Construal& c, ChainPolicy policy);

std::string_view ChainPolicyName(ChainPolicy policy);
ChainPolicy ParseChainPolicy(std::string_view name);

}  // namespace construal

#endif  // CONSTRUAL_CONSTRUAL_HPP_
