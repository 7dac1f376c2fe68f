/*
 * Copyright 2026 The mppg Authors
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

#ifndef MPPG_CLI_HPP
#define MPPG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mppg {

/**
 * Entry point of the `mppg` tool. Reads `-` paths from `in`, writes results
 * to `out` (or the --out/--output file) and diagnostics to `err`.
 *
 * Exit codes: 0 success or accept, 1 reject or no witness, 2 usage, parse
 * or validity errors.
 */
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mppg

#endif
