/*
 * Copyright 2026 The pgsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PG_CLI_HPP
#define PG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // solver disagreement or failed verification
inline constexpr int kExitInputError = 2;  // bad arguments or unreadable input

// Runs the command line (without the program name) and returns the exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pg

#endif
