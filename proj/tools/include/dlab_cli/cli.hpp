// Copyright 2026 The duality_lab Authors
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

#ifndef DLAB_CLI_CLI_HPP
#define DLAB_CLI_CLI_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace dlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses a flat `key = value` file. Blank lines and `#` comments are
/// ignored; keys may carry a leading `--`. Throws std::runtime_error on
/// unreadable files or lines without `=`.
std::map<std::string, std::string> read_config(const std::string &path);

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dlab::cli

#endif
