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

#ifndef CONSTRUAL_CLI_HPP_
#define CONSTRUAL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace construal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Output goes to
// `out` unless --out is given; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CONSTRUAL_DATA_DIR if set, else the bundled data directory.
std::string DefaultDataDir();

}  // namespace construal

#endif  // CONSTRUAL_CLI_HPP_
