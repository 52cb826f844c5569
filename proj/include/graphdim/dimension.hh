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

#ifndef GRAPHDIM_DIMENSION_HH
#define GRAPHDIM_DIMENSION_HH

#include <graphdim/cover.hh>
#include <graphdim/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace graphdim
{
    /// Raised when a metric variant is asked of a disconnected graph.
    class DisconnectedGraph : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class DimensionVariant
    {
    public:
        enum class Kind
        {
            metric,
            adjacency,
            local_metric,
            local_adjacency,
            truncated
        };

    private:
        Kind _kind = Kind::metric;
        unsigned _truncation = 0;

        DimensionVariant(Kind kind, unsigned truncation) :
            _kind(kind),
            _truncation(truncation)
        {
        }

    public:
        DimensionVariant() = default;

        static auto metric() -> DimensionVariant { return {Kind::metric, 0}; }
        static auto adjacency() -> DimensionVariant { return {Kind::adjacency, 0}; }
        static auto local_metric() -> DimensionVariant { return {Kind::local_metric, 0}; }
        static auto local_adjacency() -> DimensionVariant { return {Kind::local_adjacency, 0}; }
        /// Metric d_{G,k}(x, y) = min(d_G(x, y), k); k >= 1.
        static auto truncated(unsigned k) -> DimensionVariant;

        /// Accepts dim, adim, ldim, ladim and trunc:<k>.
        static auto parse(const std::string &) -> DimensionVariant;

        auto kind() const -> Kind { return _kind; }
        auto truncation() const -> unsigned { return _truncation; }

        /// Metric kinds work on distances and need a connected graph.
        auto needs_connected() const -> bool { return _kind != Kind::adjacency && _kind != Kind::local_adjacency; }
        auto is_local() const -> bool { return _kind == Kind::local_metric || _kind == Kind::local_adjacency; }

        auto name() const -> std::string;

        friend auto operator==(const DimensionVariant &, const DimensionVariant &) -> bool = default;
    };

    struct BasisCertificate
    {
        DimensionVariant variant;
        unsigned value = 0;
        std::vector<unsigned> witness;
        bool exhaustive = false;
    };

    auto is_generator(const Graph & g, const std::vector<unsigned> & set, DimensionVariant variant) -> bool;
    auto is_generator(const Graph & g, const VertexSet & set, DimensionVariant variant) -> bool;

    /// Pairs to separate and their resolvers, plus the graph's twin classes.
    auto generator_problem(const Graph & g, DimensionVariant variant) -> CoverProblem;

    /// Value and lexicographically least basis. Throws DisconnectedGraph or BudgetExceeded.
    auto dimension(const Graph & g, DimensionVariant variant, SearchLimits limits = {}) -> BasisCertificate;

    /// Only the value; skips the canonical witness search.
    auto dimension_value(const Graph & g, DimensionVariant variant, SearchLimits limits = {}) -> unsigned;

    /// Whether some generator of size at most k exists.
    auto has_generator_of_size(const Graph & g, DimensionVariant variant, unsigned k, SearchLimits limits = {}) -> bool;

    /// Every basis, each sorted ascending, in lexicographic order.
    auto enumerate_min_bases(const Graph & g, DimensionVariant variant, SearchLimits limits = {})
        -> std::vector<std::vector<unsigned>>;

    /// n - t for t twin classes; a lower bound on dim for connected graphs.
    auto twin_lower_bound(const Graph & g) -> unsigned;

    /// Transpositions of twins are automorphisms, so every twin class is interchangeable.
    auto twin_classes(const Graph & g) -> std::vector<std::vector<unsigned>>;
}

#endif
