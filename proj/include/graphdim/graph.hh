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

#ifndef GRAPHDIM_GRAPH_HH
#define GRAPHDIM_GRAPH_HH

#include <graphdim/vertex_set.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphdim
{
    using Edge = std::pair<unsigned, unsigned>;

    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /**
     * Immutable simple undirected graph on vertices 0..order()-1. Adjacency is
     * kept as one bit row per vertex; rows are symmetric and loop-free.
     */
    class Graph
    {
    private:
        std::vector<VertexSet> _rows;
        unsigned _size = 0;

        explicit Graph(std::vector<VertexSet> rows);

    public:
        Graph() = default;

        /// Duplicate pairs collapse; out-of-range endpoints and self-loops throw GraphError.
        static auto from_edge_list(unsigned order, const std::vector<Edge> & edges) -> Graph;

        /// Builds from rows that must already be symmetric and loop-free.
        static auto from_rows(std::vector<VertexSet> rows) -> Graph;

        auto order() const -> unsigned { return static_cast<unsigned>(_rows.size()); }
        auto size() const -> unsigned { return _size; }

        auto adjacent(unsigned u, unsigned v) const -> bool { return _rows[u].test(v); }
        auto degree(unsigned v) const -> unsigned { return _rows[v].count(); }

        /// N(v), without range checking.
        auto row(unsigned v) const -> const VertexSet & { return _rows[v]; }

        auto open_neighborhood(unsigned v) const -> const VertexSet &;
        auto closed_neighborhood(unsigned v) const -> VertexSet;

        /// All edges (u, v) with u < v, in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;
    };

    /// Entry value strictly larger than every finite distance; never truncated.
    class MetricMatrix
    {
    private:
        unsigned _order = 0;
        std::optional<unsigned> _truncation;
        std::vector<unsigned> _entries;

    public:
        MetricMatrix(unsigned order, std::optional<unsigned> truncation, std::vector<unsigned> entries);

        auto order() const -> unsigned { return _order; }
        auto truncation() const -> std::optional<unsigned> { return _truncation; }
        auto infinity() const -> unsigned { return _order; }

        auto operator()(unsigned i, unsigned j) const -> unsigned { return _entries[i * _order + j]; }
        auto at(unsigned i, unsigned j) const -> unsigned;
        auto is_infinite(unsigned i, unsigned j) const -> bool { return (*this)(i, j) == infinity(); }
    };

    enum class TwinKind
    {
        singleton,
        true_twin,
        false_twin
    };

    auto to_string(TwinKind) -> std::string;

    struct TwinClass
    {
        std::vector<unsigned> members;
        TwinKind kind;
    };

    /// Classes ordered by smallest member; members ascending.
    struct TwinPartition
    {
        std::vector<TwinClass> classes;

        auto class_count() const -> unsigned { return static_cast<unsigned>(classes.size()); }
        auto count(TwinKind kind) const -> unsigned;
        auto has_singleton() const -> bool { return count(TwinKind::singleton) != 0; }
    };

    auto all_pairs_distances(const Graph & g, std::optional<unsigned> truncation = std::nullopt) -> MetricMatrix;

    /// nullopt signals an infinite value (some vertex unreachable).
    auto eccentricity(const Graph & g, unsigned v) -> std::optional<unsigned>;
    auto diameter(const Graph & g) -> std::optional<unsigned>;
    auto radius(const Graph & g) -> std::optional<unsigned>;

    auto complement(const Graph & g) -> Graph;

    /// Removes v; the remaining vertices keep their relative order.
    auto delete_vertex(const Graph & g, unsigned v) -> Graph;

    /// Subgraph induced by the given vertices, relabelled in ascending order.
    auto induced_subgraph(const Graph & g, const std::vector<unsigned> & vertices) -> Graph;

    auto connected_components(const Graph & g) -> std::vector<std::vector<unsigned>>;
    auto is_connected(const Graph & g) -> bool;
    auto is_bipartite(const Graph & g) -> bool;

    auto twin_partition(const Graph & g) -> TwinPartition;
}

#endif
