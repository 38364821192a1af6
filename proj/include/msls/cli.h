// Copyright 2026 The msls Authors.
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


// Command-line front end. Subcommands:
//
//   gen KIND      write a seeded random instance
//   analyze [F]   metric, gamma and classification diagnostics
//   solve [F]     local search plus matching step, optional exhaustive OPT
//   verify SUITE  randomized property suites
//
// Instances are read from F, or from standard input when F is absent or
// "-". Reports are JSON documents
//   {"schema_version", "command", "inputs_digest", "flags", "results"}.
//
// Exit codes: 0 success, 1 internal error, 2 validation error, 3 guard
// exceeded, 4 property failure.

#ifndef MSLS_CLI_H_
#define MSLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace msls {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitPropertyFailure = 4;

inline constexpr int kReportSchemaVersion = 1;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, std::istream& in);

}  // namespace msls

#endif  // MSLS_CLI_H_
