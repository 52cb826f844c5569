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

#ifndef GRAPHDIM_PARAMETERS_HH
#define GRAPHDIM_PARAMETERS_HH

#include <graphdim/cover.hh>
#include <graphdim/graph.hh>

#include <string>
#include <vector>

namespace graphdim
{
    /// Value and lexicographically least optimal set of a graph parameter.
    struct ParameterCertificate
    {
        std::string parameter;
        unsigned value = 0;
        std::vector<unsigned> witness;
        bool exhaustive = true;
    };

    struct GammaPrime
    {
        unsigned value = 0;
        unsigned deleted_vertex = 0;
        /// A minimum dominating set of G - deleted_vertex, in the labels of G.
        std::vector<unsigned> witness;
    };

    auto is_dominating(const Graph & g, const VertexSet & set) -> bool;
    auto is_vertex_cover(const Graph & g, const VertexSet & set) -> bool;
    auto is_independent(const Graph & g, const VertexSet & set) -> bool;
    auto is_locating_dominating(const Graph & g, const VertexSet & set) -> bool;

    auto domination_number(const Graph & g, SearchLimits limits = {}) -> ParameterCertificate;

    /// min over v of γ(G - v), least v on ties. Needs order >= 2.
    auto gamma_prime(const Graph & g, SearchLimits limits = {}) -> GammaPrime;

    auto vertex_cover_number(const Graph & g, SearchLimits limits = {}) -> ParameterCertificate;

    /// Witness is the complement of the vertex cover witness, so α + β = n.
    auto independence_number(const Graph & g, SearchLimits limits = {}) -> ParameterCertificate;

    /// Minimum dominating D with N(u) ∩ D ≠ N(v) ∩ D for distinct u, v outside D.
    auto min_locating_dominating(const Graph & g, SearchLimits limits = {}) -> ParameterCertificate;

    auto domination_problem(const Graph & g) -> CoverProblem;
    auto vertex_cover_problem(const Graph & g) -> CoverProblem;
    auto locating_dominating_problem(const Graph & g) -> CoverProblem;
}

#endif
