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

#ifndef GRAPHDIM_TESTS_ORACLE_HH
#define GRAPHDIM_TESTS_ORACLE_HH

#include <graphdim/graph.hh>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

// Reference implementations used only by the tests: plain subset scans in
// order of cardinality, then of lexicographic member list, with definitions
// transcribed directly and no shared code with the solvers beyond Graph.
namespace oracle
{
    using graphdim::Graph;

    enum class Kind
    {
        metric,
        adjacency,
        local_metric,
        local_adjacency
    };

    struct Result
    {
        unsigned value;
        std::vector<unsigned> witness;
    };

    using Predicate = std::function<bool(std::uint32_t)>;

    /// Smallest set satisfying the predicate, lexicographically least among those.
    auto first_subset(unsigned n, const Predicate & accepts) -> Result;

    /// Every set of the least accepted size, each as a sorted list, in lexicographic order.
    auto all_least_subsets(unsigned n, const Predicate & accepts) -> std::vector<std::vector<unsigned>>;

    /// Floyd-Warshall; unreachable pairs get n.
    auto distances(const Graph & g) -> std::vector<std::vector<unsigned>>;

    auto generates(const Graph & g, std::uint32_t set, Kind kind, unsigned truncation = 0) -> bool;
    auto dimension(const Graph & g, Kind kind, unsigned truncation = 0) -> Result;
    auto bases(const Graph & g, Kind kind) -> std::vector<std::vector<unsigned>>;

    auto dominates(const Graph & g, std::uint32_t set) -> bool;
    auto domination(const Graph & g) -> Result;
    auto vertex_cover(const Graph & g) -> Result;
    auto independent_set(const Graph & g) -> Result;
    auto locating_dominating(const Graph & g) -> Result;

    /// One representative of every isomorphism class of graphs on n vertices (n <= 6).
    auto graphs_of_order(unsigned n) -> std::vector<Graph>;
    auto connected_graphs_of_order(unsigned n) -> std::vector<Graph>;

    /// G(n, 1/2).
    auto random_graph(unsigned n, std::mt19937_64 & rng) -> Graph;
    auto random_connected_graph(unsigned n, std::mt19937_64 & rng) -> Graph;
}

#endif
