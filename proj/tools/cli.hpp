// Copyright 2026 The Brauer Factorization Authors
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


// Command-line front end. Exit status: 0 success, 1 domain error (stderr
// carries "error: <ErrorName>: <message>"), 2 usage error.

#ifndef BRAUER_TOOLS_CLI_HPP_
#define BRAUER_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer {

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace brauer

#endif  // BRAUER_TOOLS_CLI_HPP_
