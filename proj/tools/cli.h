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

// Command-line front end. run_cli() is the whole program minus process
// setup, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 a bound was violated, 2 verification failed,
// 3 bad input or arguments.

#ifndef REPKERNEL_TOOLS_CLI_H_
#define REPKERNEL_TOOLS_CLI_H_

#include <iosfwd>

namespace repkernel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBound = 1;
inline constexpr int kExitVerify = 2;
inline constexpr int kExitInput = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace repkernel::cli

#endif  // REPKERNEL_TOOLS_CLI_H_
