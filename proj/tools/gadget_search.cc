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

#include <graphdim/reductions.hh>

#include <CLI11.hpp>

#include <iostream>

using namespace graphdim;

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Search rotation-symmetric nine-vertex clause gadgets and certify them.", "gadget_search"};
    unsigned edges = 15;
    std::size_t limit = 1;
    app.add_option("--edges", edges, "Total edge count of a candidate")->capture_default_str();
    app.add_option("--limit", limit, "Stop after this many gadgets (0 = all)")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    auto found = search_clause_gadgets(edges, limit);
    for (auto & gadget : found) {
        auto certificate = certify_clause_gadget(gadget);
        for (auto [u, v] : gadget)
            std::cout << '{' << u << ',' << v << '}';
        std::cout << (gadget == clause_gadget() ? "  frozen" : "") << (certificate.holds() ? "  certified" : "  REJECTED")
                  << '\n';
    }
    std::cout << found.size() << " gadget(s)\n";
    return found.empty() ? 1 : 0;
}
