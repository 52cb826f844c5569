// Copyright 2026 The graphdim Authors
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

#ifndef GRAPHDIM_TOOLS_CLI_HH
#define GRAPHDIM_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdim::cli
{
    enum ExitCode : int
    {
        ok = 0,
        input_error = 1,
        budget_exceeded = 2,
        mismatch = 3
    };

    /// Runs one command line; args excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
