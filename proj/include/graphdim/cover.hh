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

#ifndef GRAPHDIM_COVER_HH
#define GRAPHDIM_COVER_HH

#include <graphdim/vertex_set.hh>

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace graphdim
{
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct SearchLimits
    {
        /// Maximum number of search nodes over the lifetime of one search; zero means unlimited.
        std::uint64_t node_budget = 0;
        unsigned threads = 1;
    };

    /**
     * A family of vertex sets that a solution must hit. Every parameter in the
     * library reduces to this: a generator must contain, for each pair it has
     * to separate, one of the pair's resolvers.
     *
     * Each interchangeable class lists vertices such that swapping any two of
     * them maps the constraint family onto itself (twins, in every caller).
     */
    struct CoverProblem
    {
        unsigned universe = 0;
        std::vector<VertexSet> constraints;
        std::vector<std::vector<unsigned>> interchangeable;
    };

    /**
     * Exact minimum hitting set by branch and bound: branch on the open
     * constraint with fewest remaining candidates, include each in turn and
     * exclude it from later siblings, prune with a disjoint-packing bound.
     * Interchangeable vertices are only ever chosen as a prefix of their class
     * in decision queries; enumeration does not break symmetry.
     *
     * Results never depend on SearchLimits::threads.
     */
    class CoverSearch
    {
    private:
        struct Frame;

        CoverProblem _problem;
        SearchLimits _limits;
        std::atomic<std::uint64_t> _nodes{0};

        auto tick() -> void;
        auto make_root(const VertexSet & forced, const VertexSet & allowed, bool symmetric) const -> Frame;
        auto expand(const Frame & frame, unsigned k, std::vector<Frame> & children, bool & solved) -> void;
        auto find_from(const Frame & frame, unsigned k) -> std::optional<VertexSet>;
        auto enumerate_from(const Frame & frame, unsigned k, std::vector<VertexSet> & out) -> void;

    public:
        CoverSearch(CoverProblem problem, SearchLimits limits = {});

        auto universe() const -> unsigned { return _problem.universe; }
        auto constraint_count() const -> std::size_t { return _problem.constraints.size(); }

        /// Some H with forced ⊆ H ⊆ allowed, |H| <= k, hitting every constraint.
        auto find(unsigned k, const VertexSet & forced, const VertexSet & allowed) -> std::optional<VertexSet>;
        auto find(unsigned k) -> std::optional<VertexSet>;

        auto lower_bound() const -> unsigned;

        /// Some hitting set of minimum cardinality.
        auto minimum() -> VertexSet;

        /// The minimum hitting set whose sorted member list is lexicographically least.
        auto canonical_minimum() -> VertexSet;

        /// Every hitting set of minimum cardinality, sorted lexicographically.
        auto all_minimum() -> std::vector<VertexSet>;

        auto nodes() const -> std::uint64_t { return _nodes.load(); }
    };

    /// Greedy: repeatedly take the vertex hitting most open constraints.
    auto greedy_cover(const CoverProblem & problem) -> VertexSet;
}

#endif
