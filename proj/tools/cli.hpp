// Copyright 2026 The copsearch Authors
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

#ifndef COPSEARCH_TOOLS_CLI_HPP_
#define COPSEARCH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace copsearch::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kBudget = 3,
  kCertificateInvalid = 4,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace copsearch::cli

#endif  // COPSEARCH_TOOLS_CLI_HPP_
