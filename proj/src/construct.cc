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

#include <graphdim/construct.hh>

#include <array>

using std::string;
using std::vector;

namespace graphdim
{
    using std::to_string;

    namespace
    {
        auto require(bool condition, const string & what) -> void
        {
            if (! condition)
                throw GraphError(what);
        }

        constexpr std::array family_names{
            std::pair{Family::path, "path"},
            std::pair{Family::cycle, "cycle"},
            std::pair{Family::complete, "complete"},
            std::pair{Family::complete_bipartite, "complete_bipartite"},
            std::pair{Family::star, "star"},
            std::pair{Family::wheel, "wheel"},
            std::pair{Family::fan, "fan"},
            std::pair{Family::null, "null"}};
    }

    auto to_string(Family kind) -> string
    {
        for (auto & [k, name] : family_names)
            if (k == kind)
                return name;
        return "?";
    }

    auto parse_family(const string & name) -> std::optional<Family>
    {
        for (auto & [k, n] : family_names)
            if (name == n)
                return k;
        return std::nullopt;
    }

    auto family(Family kind, std::span<const unsigned> params) -> Graph
    {
        unsigned expected = kind == Family::complete_bipartite ? 2 : 1;
        require(params.size() == expected,
            to_string(kind) + " takes " + to_string(expected) + " parameter(s), got " + to_string(params.size()));

        switch (kind) {
            case Family::path: return path(params[0]);
            case Family::cycle: return cycle(params[0]);
            case Family::complete: return complete(params[0]);
            case Family::complete_bipartite: return complete_bipartite(params[0], params[1]);
            case Family::star: return star(params[0]);
            case Family::wheel: return wheel(params[0]);
            case Family::fan: return fan(params[0]);
            case Family::null: return null_graph(params[0]);
        }
        throw GraphError("unknown family");
    }

    auto path(unsigned n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        vector<Edge> edges;
        for (unsigned i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edge_list(n, edges);
    }

    auto cycle(unsigned n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        vector<Edge> edges;
        for (unsigned i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edge_list(n, edges);
    }

    auto complete(unsigned n) -> Graph
    {
        require(n >= 1, "complete needs n >= 1");
        vector<Edge> edges;
        for (unsigned u = 0; u < n; ++u)
            for (unsigned v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edge_list(n, edges);
    }

    auto complete_bipartite(unsigned r, unsigned s) -> Graph
    {
        require(r >= 1 && s >= 1, "complete_bipartite needs r, s >= 1");
        vector<Edge> edges;
        for (unsigned u = 0; u < r; ++u)
            for (unsigned v = 0; v < s; ++v)
                edges.emplace_back(u, r + v);
        return Graph::from_edge_list(r + s, edges);
    }

    auto star(unsigned r) -> Graph
    {
        require(r >= 1, "star needs r >= 1");
        return complete_bipartite(1, r);
    }

    auto wheel(unsigned n) -> Graph
    {
        require(n >= 4, "wheel needs n >= 4");
        return join(complete(1), cycle(n - 1));
    }

    auto fan(unsigned n) -> Graph
    {
        require(n >= 3, "fan needs n >= 3");
        return join(complete(1), path(n - 1));
    }

    auto null_graph(unsigned n) -> Graph
    {
        require(n >= 1, "null needs n >= 1");
        return Graph::from_edge_list(n, {});
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        auto edges = g.edges();
        for (auto [u, v] : h.edges())
            edges.emplace_back(g.order() + u, g.order() + v);
        return Graph::from_edge_list(g.order() + h.order(), edges);
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        auto edges = disjoint_union(g, h).edges();
        for (unsigned u = 0; u < g.order(); ++u)
            for (unsigned v = 0; v < h.order(); ++v)
                edges.emplace_back(u, g.order() + v);
        return Graph::from_edge_list(g.order() + h.order(), edges);
    }

    auto corona(const Graph & g, const Graph & h) -> CoronaProduct
    {
        unsigned n = g.order(), m = h.order();
        CoronaProduct result{Graph{}, {}, n, m};
        auto edges = g.edges();
        auto h_edges = h.edges();
        result.roles.reserve(n * (1 + m));
        for (unsigned i = 0; i < n; ++i)
            result.roles.push_back(CoronaRole{true, i, 0});
        for (unsigned i = 0; i < n; ++i) {
            for (auto [a, b] : h_edges)
                edges.emplace_back(result.copy_vertex(i, a), result.copy_vertex(i, b));
            for (unsigned x = 0; x < m; ++x) {
                edges.emplace_back(i, result.copy_vertex(i, x));
                result.roles.push_back(CoronaRole{false, i, x});
            }
        }
        result.graph = Graph::from_edge_list(n * (1 + m), edges);
        return result;
    }

    auto strong(const Graph & g, const Graph & h) -> Graph
    {
        unsigned n = g.order(), m = h.order();
        vector<VertexSet> rows;
        rows.reserve(n * m);
        for (unsigned a = 0; a < n; ++a) {
            auto ga = g.closed_neighborhood(a);
            for (unsigned b = 0; b < m; ++b) {
                auto hb = h.closed_neighborhood(b);
                VertexSet row(n * m);
                ga.for_each([&](unsigned x) { hb.for_each([&](unsigned y) { row.set(x * m + y); }); });
                row.reset(a * m + b);
                rows.push_back(std::move(row));
            }
        }
        return Graph::from_rows(std::move(rows));
    }

    auto strong_power(std::span<const Graph> factors) -> Graph
    {
        require(! factors.empty(), "strong_power needs at least one factor");
        auto result = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i)
            result = strong(result, factors[i]);
        return result;
    }
}
