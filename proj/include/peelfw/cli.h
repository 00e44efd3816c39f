// Copyright 2026 The Authors.
//
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

#ifndef PEELFW_CLI_H_
#define PEELFW_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace peelfw {

// Exit codes of RunCli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitUsage = 64;

// args excludes the program name. JSON results go to out (or --out), usage
// and diagnostics to err.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace peelfw

#endif  // PEELFW_CLI_H_
