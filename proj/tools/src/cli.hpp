/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RIOCOMB_TOOLS_CLI_HPP
#define RIOCOMB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riocomb::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, InputError = 2 };

// Runs the command line given without the program name. Output goes to
// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace riocomb::cli

#endif
