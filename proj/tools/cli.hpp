// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITSIM_TOOLS_CLI_HPP
#define QUDITSIM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quditsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// error reports and the human-readable summary to `err`, and `-` paths read
/// from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace quditsim::cli

#endif  // QUDITSIM_TOOLS_CLI_HPP
