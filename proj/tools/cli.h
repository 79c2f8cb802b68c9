// Copyright 2026 The alalc Authors.
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

#ifndef ALALC_TOOLS_CLI_H_
#define ALALC_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace alalc::cli {

// Runs one alalc command. Returns the process exit status; failures print a
// single "error: code=... message=..." line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alalc::cli

#endif  // ALALC_TOOLS_CLI_H_
