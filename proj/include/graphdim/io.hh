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

#ifndef GRAPHDIM_IO_HH
#define GRAPHDIM_IO_HH

#include <graphdim/dimension.hh>
#include <graphdim/graph.hh>
#include <graphdim/parameters.hh>
#include <graphdim/reductions.hh>
#include <graphdim/theorems.hh>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphdim
{
    /// Malformed edge-list text or graph spec; carries a line or column when known.
    class ParseError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// First non-comment line `n m`, then m lines `u v`; `#` starts a comment.
    auto read_edge_list(std::istream & in) -> Graph;
    auto read_edge_list_file(const std::string & path) -> Graph;

    /// Header then edges in lexicographic order; equal graphs give equal bytes.
    auto write_edge_list(const Graph & g) -> std::string;

    /**
     * Graph spec grammar:
     *
     *   spec   := family | op '(' spec (',' spec)* ')'
     *   family := name (':' int)+          e.g. path:7, complete_bipartite:2:3
     *   op     := corona | strong | union | join | complement
     *
     * corona takes exactly two arguments, complement one; strong, union and
     * join fold left over two or more. Whitespace is ignored.
     */
    auto parse_graph_spec(const std::string & text) -> Graph;

    /// FNV-1a 64 over write_edge_list(g), as 16 lowercase hex digits.
    auto graph_hash(const Graph & g) -> std::string;

    auto to_json(const BasisCertificate & c, const Graph & g) -> nlohmann::ordered_json;
    auto to_json(const ParameterCertificate & c, const Graph & g) -> nlohmann::ordered_json;
    auto to_json(const TheoremReport & r) -> nlohmann::ordered_json;
    /// Sidecar for a reduction output: {budget, roles, provenance}.
    auto to_json(const ReductionInstance & r) -> nlohmann::ordered_json;

    /// Undirected DOT; highlighted vertices are filled.
    auto to_dot(const Graph & g, const std::vector<unsigned> & highlight = {}) -> std::string;
}

#endif
