// Copyright 2026 The Translative Authors.
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

#ifndef TRANSLATIVE_TOOLS_COMMANDS_HPP_
#define TRANSLATIVE_TOOLS_COMMANDS_HPP_

#include <string>
#include <vector>

#include "problem.hpp"

namespace translative::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  Json output;
  int exit_code = kExitSuccess;
};

const std::vector<std::string>& CommandNames();
const std::vector<std::string>& SuiteNames();

// Runs one subcommand on a parsed problem document. Library errors and
// malformed input become {"error": {...}} with exit code 2; nothing throws.
CommandResult RunCommand(const std::string& command, const Json& document,
                         const Overrides& overrides,
                         const std::string& suite = "all");

}  // namespace translative::cli

#endif  // TRANSLATIVE_TOOLS_COMMANDS_HPP_
