// Copyright 2026 The Bananaworld Authors
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

#ifndef BANANAWORLD_CLI_HPP
#define BANANAWORLD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bananaworld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

const char *version();

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --output file), diagnostics to `err`. Returns 0 on success, 1 on
/// domain errors (with a JSON error object on `out`), 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bananaworld::cli

#endif  // BANANAWORLD_CLI_HPP
