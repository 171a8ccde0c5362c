/*
 * Copyright 2026 The rankeval authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKEVAL_CLI_HPP_
#define RANKEVAL_CLI_HPP_

#include <string>
#include <vector>

namespace rankeval {

// Entry point behind the rankeval binary, callable in-process from tests.
// Subcommands: eval, synth, phi. Returns 0 on success, 1 on input
// validation errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace rankeval

#endif  // RANKEVAL_CLI_HPP_
