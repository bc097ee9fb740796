// Copyright 2026 The degreal Authors
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

#ifndef DEGREAL_CLI_HPP_
#define DEGREAL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace degreal::cli {

// Runs the command line `args` (without the program name). Exit codes: 0 on
// success, 1 for a negative answer or a domain error, 2 for usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace degreal::cli

#endif  // DEGREAL_CLI_HPP_
