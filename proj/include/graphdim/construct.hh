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

#ifndef GRAPHDIM_CONSTRUCT_HH
#define GRAPHDIM_CONSTRUCT_HH

#include <graphdim/graph.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphdim
{
    enum class Family
    {
        path,
        cycle,
        complete,
        complete_bipartite,
        star,
        wheel,
        fan,
        null
    };

    auto to_string(Family) -> std::string;
    auto parse_family(const std::string &) -> std::optional<Family>;

    /**
     * Named families with canonical labelling: paths and cycles in traversal
     * order, wheel/fan hub and star centre at vertex 0, complete bipartite
     * left side first. Throws GraphError when a parameter is below the family
     * minimum or the parameter count is wrong.
     */
    auto family(Family kind, std::span<const unsigned> params) -> Graph;

    auto path(unsigned n) -> Graph;
    auto cycle(unsigned n) -> Graph;
    auto complete(unsigned n) -> Graph;
    auto complete_bipartite(unsigned r, unsigned s) -> Graph;
    auto star(unsigned r) -> Graph;
    auto wheel(unsigned n) -> Graph;
    auto fan(unsigned n) -> Graph;
    auto null_graph(unsigned n) -> Graph;

    /// H is shifted by order(G).
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    auto join(const Graph & g, const Graph & h) -> Graph;

    /// Where a vertex of G ⊙ H came from.
    struct CoronaRole
    {
        bool anchor;
        unsigned anchor_index; ///< i for v_i, or the anchor of the copy
        unsigned h_vertex;     ///< vertex of H this copy vertex mirrors; unused for anchors
    };

    struct CoronaProduct
    {
        Graph graph;
        std::vector<CoronaRole> roles;
        unsigned g_order;
        unsigned h_order;

        auto anchor(unsigned i) const -> unsigned { return i; }
        auto copy_vertex(unsigned i, unsigned h) const -> unsigned { return g_order + i * h_order + h; }
    };

    /// Vertices 0..n-1 are V(G); copy i of H occupies n+i*n' .. n+(i+1)*n'-1.
    auto corona(const Graph & g, const Graph & h) -> CoronaProduct;

    /// Vertex (a, b) is numbered a*order(H)+b.
    auto strong(const Graph & g, const Graph & h) -> Graph;

    /// Left fold of strong over a non-empty list.
    auto strong_power(std::span<const Graph> factors) -> Graph;
}

#endif
