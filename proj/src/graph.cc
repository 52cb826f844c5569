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

#include <graphdim/graph.hh>

#include <algorithm>
#include <deque>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace graphdim
{
    using std::to_string;

    namespace
    {
        auto check_vertex(const Graph & g, unsigned v) -> void
        {
            if (v >= g.order())
                throw GraphError("vertex " + to_string(v) + " out of range for order " + to_string(g.order()));
        }

        auto bfs(const Graph & g, unsigned source, vector<unsigned> & dist, unsigned unreachable) -> void
        {
            dist.assign(g.order(), unreachable);
            dist[source] = 0;
            std::deque<unsigned> queue{source};
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                g.row(u).for_each([&](unsigned w) {
                    if (dist[w] == unreachable) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                });
            }
        }
    }

    Graph::Graph(vector<VertexSet> rows) :
        _rows(std::move(rows))
    {
        unsigned degree_sum = 0;
        for (auto & r : _rows)
            degree_sum += r.count();
        _size = degree_sum / 2;
    }

    auto Graph::from_edge_list(unsigned order, const vector<Edge> & edges) -> Graph
    {
        vector<VertexSet> rows(order, VertexSet(order));
        for (auto [u, v] : edges) {
            if (u >= order || v >= order)
                throw GraphError("edge (" + to_string(u) + ", " + to_string(v) + ") out of range for order " + to_string(order));
            if (u == v)
                throw GraphError("self-loop at vertex " + to_string(u));
            rows[u].set(v);
            rows[v].set(u);
        }
        return Graph(std::move(rows));
    }

    auto Graph::from_rows(vector<VertexSet> rows) -> Graph
    {
        unsigned n = rows.size();
        for (unsigned u = 0; u < n; ++u) {
            if (rows[u].capacity() != n)
                throw GraphError("adjacency row " + to_string(u) + " has wrong capacity");
            if (rows[u].test(u))
                throw GraphError("self-loop at vertex " + to_string(u));
            rows[u].for_each([&](unsigned v) {
                if (! rows[v].test(u))
                    throw GraphError("asymmetric adjacency between " + to_string(u) + " and " + to_string(v));
            });
        }
        return Graph(std::move(rows));
    }

    auto Graph::open_neighborhood(unsigned v) const -> const VertexSet &
    {
        check_vertex(*this, v);
        return _rows[v];
    }

    auto Graph::closed_neighborhood(unsigned v) const -> VertexSet
    {
        check_vertex(*this, v);
        auto result = _rows[v];
        result.set(v);
        return result;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_size);
        for (unsigned u = 0; u < order(); ++u)
            for (auto v = _rows[u].next(u); v < order(); v = _rows[u].next(v))
                result.emplace_back(u, v);
        return result;
    }

    MetricMatrix::MetricMatrix(unsigned order, optional<unsigned> truncation, vector<unsigned> entries) :
        _order(order),
        _truncation(truncation),
        _entries(std::move(entries))
    {
    }

    auto MetricMatrix::at(unsigned i, unsigned j) const -> unsigned
    {
        if (i >= _order || j >= _order)
            throw GraphError("metric index (" + to_string(i) + ", " + to_string(j) + ") out of range");
        return (*this)(i, j);
    }

    auto to_string(TwinKind kind) -> string
    {
        switch (kind) {
            case TwinKind::singleton: return "singleton";
            case TwinKind::true_twin: return "true-twin";
            case TwinKind::false_twin: return "false-twin";
        }
        return "?";
    }

    auto TwinPartition::count(TwinKind kind) const -> unsigned
    {
        return std::count_if(classes.begin(), classes.end(), [&](const TwinClass & c) { return c.kind == kind; });
    }

    auto all_pairs_distances(const Graph & g, optional<unsigned> truncation) -> MetricMatrix
    {
        if (truncation && *truncation == 0)
            throw GraphError("truncation level must be positive");
        unsigned n = g.order();
        vector<unsigned> entries(std::size_t{n} * n);
        vector<unsigned> dist;
        for (unsigned s = 0; s < n; ++s) {
            bfs(g, s, dist, n);
            for (unsigned t = 0; t < n; ++t) {
                auto d = dist[t];
                if (truncation && d != n)
                    d = std::min(d, *truncation);
                entries[std::size_t{s} * n + t] = d;
            }
        }
        return MetricMatrix(n, truncation, std::move(entries));
    }

    auto eccentricity(const Graph & g, unsigned v) -> optional<unsigned>
    {
        check_vertex(g, v);
        vector<unsigned> dist;
        bfs(g, v, dist, g.order());
        unsigned result = 0;
        for (auto d : dist) {
            if (d == g.order())
                return std::nullopt;
            result = std::max(result, d);
        }
        return result;
    }

    auto diameter(const Graph & g) -> optional<unsigned>
    {
        unsigned result = 0;
        for (unsigned v = 0; v < g.order(); ++v) {
            auto e = eccentricity(g, v);
            if (! e)
                return std::nullopt;
            result = std::max(result, *e);
        }
        return result;
    }

    auto radius(const Graph & g) -> optional<unsigned>
    {
        optional<unsigned> result;
        for (unsigned v = 0; v < g.order(); ++v) {
            auto e = eccentricity(g, v);
            if (! e)
                return std::nullopt;
            if (! result || *e < *result)
                result = e;
        }
        return result.value_or(0);
    }

    auto complement(const Graph & g) -> Graph
    {
        unsigned n = g.order();
        vector<VertexSet> rows;
        rows.reserve(n);
        for (unsigned v = 0; v < n; ++v) {
            auto r = g.row(v).complement();
            r.reset(v);
            rows.push_back(std::move(r));
        }
        return Graph::from_rows(std::move(rows));
    }

    auto induced_subgraph(const Graph & g, const vector<unsigned> & vertices) -> Graph
    {
        vector<unsigned> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        vector<unsigned> index(g.order(), g.order());
        for (unsigned i = 0; i < sorted.size(); ++i) {
            check_vertex(g, sorted[i]);
            index[sorted[i]] = i;
        }
        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (index[u] != g.order() && index[v] != g.order())
                edges.emplace_back(index[u], index[v]);
        return Graph::from_edge_list(sorted.size(), edges);
    }

    auto delete_vertex(const Graph & g, unsigned v) -> Graph
    {
        check_vertex(g, v);
        vector<unsigned> keep;
        for (unsigned u = 0; u < g.order(); ++u)
            if (u != v)
                keep.push_back(u);
        return induced_subgraph(g, keep);
    }

    auto connected_components(const Graph & g) -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result;
        VertexSet seen(g.order());
        for (unsigned s = 0; s < g.order(); ++s) {
            if (seen.test(s))
                continue;
            vector<unsigned> component{s};
            seen.set(s);
            for (std::size_t i = 0; i < component.size(); ++i)
                g.row(component[i]).for_each([&](unsigned w) {
                    if (! seen.test(w)) {
                        seen.set(w);
                        component.push_back(w);
                    }
                });
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        vector<int> side(g.order(), -1);
        for (unsigned s = 0; s < g.order(); ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            vector<unsigned> stack{s};
            while (! stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                bool ok = true;
                g.row(u).for_each([&](unsigned w) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        stack.push_back(w);
                    }
                    else if (side[w] == side[u])
                        ok = false;
                });
                if (! ok)
                    return false;
            }
        }
        return true;
    }

    auto twin_partition(const Graph & g) -> TwinPartition
    {
        unsigned n = g.order();
        // Vertices sharing a closed neighbourhood (true twins) or an open
        // neighbourhood (false twins); the two groupings never overlap on a
        // class of size two or more.
        std::map<vector<unsigned>, vector<unsigned>> by_closed, by_open;
        for (unsigned v = 0; v < n; ++v) {
            by_open[g.row(v).members()].push_back(v);
            by_closed[g.closed_neighborhood(v).members()].push_back(v);
        }

        vector<int> assigned(n, -1);
        TwinPartition result;
        auto claim = [&](const vector<unsigned> & members, TwinKind kind) {
            for (auto v : members)
                assigned[v] = 1;
            result.classes.push_back(TwinClass{members, kind});
        };
        for (auto & [_, members] : by_closed)
            if (members.size() >= 2)
                claim(members, TwinKind::true_twin);
        for (auto & [_, members] : by_open)
            if (members.size() >= 2 && assigned[members.front()] == -1)
                claim(members, TwinKind::false_twin);
        for (unsigned v = 0; v < n; ++v)
            if (assigned[v] == -1)
                claim({v}, TwinKind::singleton);

        std::sort(result.classes.begin(), result.classes.end(),
            [](const TwinClass & a, const TwinClass & b) { return a.members.front() < b.members.front(); });
        return result;
    }
}
