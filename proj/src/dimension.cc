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

#include <graphdim/dimension.hh>
#include <graphdim/metric.hh>

#include <algorithm>
#include <charconv>

using std::string;
using std::vector;

namespace graphdim
{
    namespace
    {
        auto require_connected(const Graph & g, DimensionVariant variant) -> void
        {
            if (variant.needs_connected() && ! is_connected(g))
                throw DisconnectedGraph(variant.name() + " is only defined for connected graphs");
        }

        auto distance_matrix(const Graph & g, DimensionVariant variant) -> std::optional<MetricMatrix>
        {
            switch (variant.kind()) {
                case DimensionVariant::Kind::metric:
                case DimensionVariant::Kind::local_metric:
                    return all_pairs_distances(g);
                case DimensionVariant::Kind::truncated:
                    return all_pairs_distances(g, variant.truncation());
                default:
                    return std::nullopt;
            }
        }

        auto to_set(unsigned n, const vector<unsigned> & members) -> VertexSet
        {
            VertexSet s(n);
            for (auto v : members) {
                if (v >= n)
                    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
                s.set(v);
            }
            return s;
        }
    }

    auto DimensionVariant::truncated(unsigned k) -> DimensionVariant
    {
        if (k == 0)
            throw std::invalid_argument("truncation level must be at least 1");
        return {Kind::truncated, k};
    }

    auto DimensionVariant::parse(const string & text) -> DimensionVariant
    {
        if (text == "dim")
            return metric();
        if (text == "adim")
            return adjacency();
        if (text == "ldim")
            return local_metric();
        if (text == "ladim")
            return local_adjacency();
        if (text.starts_with("trunc:")) {
            unsigned k = 0;
            auto digits = text.substr(6);
            auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec == std::errc{} && end == digits.data() + digits.size() && ! digits.empty() && k >= 1)
                return truncated(k);
        }
        throw std::invalid_argument("unknown dimension variant '" + text + "' (expected dim, adim, ldim, ladim or trunc:<k>)");
    }

    auto DimensionVariant::name() const -> string
    {
        switch (_kind) {
            case Kind::metric: return "dim";
            case Kind::adjacency: return "adim";
            case Kind::local_metric: return "ldim";
            case Kind::local_adjacency: return "ladim";
            case Kind::truncated: return "trunc:" + std::to_string(_truncation);
        }
        return "?";
    }

    auto is_generator(const Graph & g, const VertexSet & set, DimensionVariant variant) -> bool
    {
        require_connected(g, variant);
        auto matrix = distance_matrix(g, variant);
        unsigned n = g.order();
        for (unsigned x = 0; x < n; ++x) {
            if (set.test(x))
                continue;
            for (unsigned y = x + 1; y < n; ++y) {
                if (set.test(y))
                    continue;
                if (variant.is_local() && ! g.adjacent(x, y))
                    continue;
                bool separated = false;
                set.for_each([&](unsigned s) {
                    if (! separated)
                        separated = matrix ? distinguishes(*matrix, s, x, y) : adjacency_distinguishes(g, s, x, y);
                });
                if (! separated)
                    return false;
            }
        }
        return true;
    }

    auto is_generator(const Graph & g, const vector<unsigned> & set, DimensionVariant variant) -> bool
    {
        return is_generator(g, to_set(g.order(), set), variant);
    }

    auto twin_classes(const Graph & g) -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result;
        for (auto & c : twin_partition(g).classes)
            if (c.members.size() >= 2)
                result.push_back(c.members);
        return result;
    }

    auto generator_problem(const Graph & g, DimensionVariant variant) -> CoverProblem
    {
        require_connected(g, variant);
        auto matrix = distance_matrix(g, variant);
        unsigned n = g.order();
        CoverProblem problem{n, {}, twin_classes(g)};
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = x + 1; y < n; ++y) {
                if (variant.is_local() && ! g.adjacent(x, y))
                    continue;
                // Pairs meeting the generator need no separating vertex, so x
                // and y always resolve their own pair.
                auto resolvers = matrix ? metric_distinguishers(*matrix, x, y) : adjacency_distinguishers(g, x, y);
                resolvers.set(x);
                resolvers.set(y);
                problem.constraints.push_back(std::move(resolvers));
            }
        return problem;
    }

    auto dimension(const Graph & g, DimensionVariant variant, SearchLimits limits) -> BasisCertificate
    {
        CoverSearch search(generator_problem(g, variant), limits);
        auto basis = search.canonical_minimum();
        return BasisCertificate{variant, basis.count(), basis.members(), true};
    }

    auto dimension_value(const Graph & g, DimensionVariant variant, SearchLimits limits) -> unsigned
    {
        CoverSearch search(generator_problem(g, variant), limits);
        return search.minimum().count();
    }

    auto has_generator_of_size(const Graph & g, DimensionVariant variant, unsigned k, SearchLimits limits) -> bool
    {
        CoverSearch search(generator_problem(g, variant), limits);
        return search.find(k).has_value();
    }

    auto enumerate_min_bases(const Graph & g, DimensionVariant variant, SearchLimits limits) -> vector<vector<unsigned>>
    {
        CoverSearch search(generator_problem(g, variant), limits);
        vector<vector<unsigned>> result;
        for (auto & s : search.all_minimum())
            result.push_back(s.members());
        return result;
    }

    auto twin_lower_bound(const Graph & g) -> unsigned
    {
        return g.order() - twin_partition(g).class_count();
    }
}
