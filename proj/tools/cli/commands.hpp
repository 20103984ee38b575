// Copyright 2026 The Photonamp Authors
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

#ifndef PHOTONAMP_CLI_COMMANDS_HPP
#define PHOTONAMP_CLI_COMMANDS_HPP

#include <string>
#include <vector>

namespace photonamp::cli {

/// Entry point of the photonamp tool. Exit codes: 0 success, 2 config or
/// usage error (reported before any computation), 1 runtime error.
int run_cli(int argc, const char* const* argv);

/// Convenience overload for tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace photonamp::cli

#endif
