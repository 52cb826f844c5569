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
#include <graphdim/parameters.hh>

#include <set>

using std::vector;

namespace graphdim
{
    namespace
    {
        auto certify(const char * name, CoverProblem problem, SearchLimits limits) -> ParameterCertificate
        {
            CoverSearch search(std::move(problem), limits);
            auto best = search.canonical_minimum();
            return ParameterCertificate{name, best.count(), best.members(), true};
        }

        auto check_capacity(const Graph & g, const VertexSet & set) -> void
        {
            if (set.capacity() != g.order())
                throw GraphError("vertex set capacity does not match the graph order");
        }
    }

    auto domination_problem(const Graph & g) -> CoverProblem
    {
        CoverProblem problem{g.order(), {}, twin_classes(g)};
        for (unsigned v = 0; v < g.order(); ++v)
            problem.constraints.push_back(g.closed_neighborhood(v));
        return problem;
    }

    auto vertex_cover_problem(const Graph & g) -> CoverProblem
    {
        CoverProblem problem{g.order(), {}, twin_classes(g)};
        for (auto [u, v] : g.edges())
            problem.constraints.push_back(VertexSet(g.order(), {u, v}));
        return problem;
    }

    auto locating_dominating_problem(const Graph & g) -> CoverProblem
    {
        auto problem = domination_problem(g);
        for (unsigned u = 0; u < g.order(); ++u)
            for (unsigned v = u + 1; v < g.order(); ++v) {
                // Either u or v is in D, or D meets exactly one of their neighbourhoods.
                auto c = g.row(u) ^ g.row(v);
                c.set(u);
                c.set(v);
                problem.constraints.push_back(std::move(c));
            }
        return problem;
    }

    auto is_dominating(const Graph & g, const VertexSet & set) -> bool
    {
        check_capacity(g, set);
        for (unsigned v = 0; v < g.order(); ++v)
            if (! set.test(v) && ! g.row(v).intersects(set))
                return false;
        return true;
    }

    auto is_vertex_cover(const Graph & g, const VertexSet & set) -> bool
    {
        check_capacity(g, set);
        for (auto [u, v] : g.edges())
            if (! set.test(u) && ! set.test(v))
                return false;
        return true;
    }

    auto is_independent(const Graph & g, const VertexSet & set) -> bool
    {
        check_capacity(g, set);
        bool independent = true;
        set.for_each([&](unsigned v) { independent = independent && ! g.row(v).intersects(set); });
        return independent;
    }

    auto is_locating_dominating(const Graph & g, const VertexSet & set) -> bool
    {
        if (! is_dominating(g, set))
            return false;
        std::set<vector<unsigned>> traces;
        unsigned outside = 0;
        for (unsigned v = 0; v < g.order(); ++v)
            if (! set.test(v)) {
                traces.insert((g.row(v) & set).members());
                ++outside;
            }
        return traces.size() == outside;
    }

    auto domination_number(const Graph & g, SearchLimits limits) -> ParameterCertificate
    {
        return certify("gamma", domination_problem(g), limits);
    }

    auto gamma_prime(const Graph & g, SearchLimits limits) -> GammaPrime
    {
        if (g.order() < 2)
            throw GraphError("gamma' needs a graph with at least two vertices");
        GammaPrime best{~0u, 0, {}};
        for (unsigned v = 0; v < g.order(); ++v) {
            auto cert = domination_number(delete_vertex(g, v), limits);
            if (cert.value < best.value) {
                best = GammaPrime{cert.value, v, {}};
                for (auto u : cert.witness)
                    best.witness.push_back(u < v ? u : u + 1);
            }
        }
        return best;
    }

    auto vertex_cover_number(const Graph & g, SearchLimits limits) -> ParameterCertificate
    {
        return certify("beta", vertex_cover_problem(g), limits);
    }

    auto independence_number(const Graph & g, SearchLimits limits) -> ParameterCertificate
    {
        auto cover = vertex_cover_number(g, limits);
        VertexSet in_cover(g.order(), cover.witness);
        auto independent = in_cover.complement();
        return ParameterCertificate{"alpha", g.order() - cover.value, independent.members(), true};
    }

    auto min_locating_dominating(const Graph & g, SearchLimits limits) -> ParameterCertificate
    {
        return certify("locating-dominating", locating_dominating_problem(g), limits);
    }
}
