// Copyright 2026 The polignac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace polignac::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kInvariantViolation = 2 };

struct CommandResult {
  std::string command;      // echoed invocation
  nlohmann::ordered_json payload;
  int exit_code = kSuccess;
  std::string out;          // rendered in the requested format
  std::string err;          // diagnostics only
};

/// Parses and runs one invocation. `args` excludes the program name.
/// Never throws; failures are reported through exit_code and err.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace polignac::cli
