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

#ifndef GRAPHDIM_THEOREMS_HH
#define GRAPHDIM_THEOREMS_HH

#include <graphdim/dimension.hh>
#include <graphdim/graph.hh>
#include <graphdim/parameters.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphdim
{
    /// Raised when the literal case hypotheses overlap or leave a gap on some H.
    class CaseConflict : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// A basis S and a vertex v outside S with S ⊆ N(v).
    struct CoveredBasis
    {
        std::vector<unsigned> basis;
        unsigned vertex;
    };

    /**
     * Which adjacency-basis hypothesis holds for the second factor of a corona:
     *   A  some dominating basis S has no v outside S with S ⊆ N(v)       offset 0
     *   B  a dominating basis exists and every basis S has such a v       offset γ(G)
     *   C  no basis is dominating                                         offset n - 1
     *   D  dominating and non-dominating bases exist, every dominating
     *      basis has such a v, and some basis S' has none                 offset γ'(G)
     */
    struct CoronaAdjCase
    {
        enum class Case
        {
            A,
            B,
            C,
            D
        };

        Case kind = Case::A;
        std::vector<Case> fired;
        unsigned dimension = 0;
        unsigned basis_count = 0;
        std::optional<std::vector<unsigned>> dominating_basis;
        std::optional<std::vector<unsigned>> non_dominating_basis;
        /// A basis with no v outside it whose neighbourhood contains it; dominating when one exists.
        std::optional<std::vector<unsigned>> uncovered_basis;
        std::optional<CoveredBasis> covered_basis;
    };

    auto to_string(CoronaAdjCase::Case) -> std::string;

    /// Evaluates every case over the full list of adjacency bases. Throws CaseConflict unless exactly one fires.
    auto classify_corona_adjacency(const Graph & h, SearchLimits limits = {}) -> CoronaAdjCase;

    /// A: some local adjacency basis has no v outside it with S ⊆ N(v), offset 0; B: otherwise, offset γ(G).
    struct LocalCoronaCase
    {
        enum class Case
        {
            A,
            B
        };

        Case kind = Case::A;
        unsigned dimension = 0;
        unsigned basis_count = 0;
        std::optional<std::vector<unsigned>> uncovered_basis;
        std::optional<CoveredBasis> covered_basis;
    };

    auto to_string(LocalCoronaCase::Case) -> std::string;

    auto classify_corona_local(const Graph & h, SearchLimits limits = {}) -> LocalCoronaCase;

    struct CoronaPrediction
    {
        unsigned value = 0;
        unsigned offset = 0;
        CoronaAdjCase classification;
        /// Optimal set behind the offset: a dominating set of G, one of G - v, or empty.
        std::vector<unsigned> offset_witness;
    };

    /// n·dim_A(H) plus 0, γ(G), n - 1 or γ'(G) by case. G connected of order >= 2, H of order >= 2.
    auto predict_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits = {}) -> CoronaPrediction;
    auto predicted_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits = {}) -> unsigned;

    struct ClauseCheck
    {
        enum class Relation
        {
            equal,
            at_least
        };

        std::string clause;
        Relation relation = Relation::equal;
        long long expected = 0;
        long long actual = 0;
        bool holds = false;
    };

    struct TheoremReport
    {
        std::string theorem;
        std::vector<ClauseCheck> clauses;
        std::string case_label;
        std::vector<std::pair<std::string, BasisCertificate>> certificates;
        std::vector<std::pair<std::string, std::vector<unsigned>>> witnesses;

        auto holds() const -> bool;
        auto add(std::string clause, long long expected, long long actual, ClauseCheck::Relation relation = ClauseCheck::Relation::equal)
            -> void;
    };

    /// dim(G⊙H) = n·dim_A(H).
    auto verify_corona_dim(const Graph & g, const Graph & h, SearchLimits limits = {}) -> TheoremReport;

    /// dim_A(G⊙H) against the case prediction, plus the equivalences between case A or C and dim(G⊙H).
    auto verify_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits = {}) -> TheoremReport;

    /// dim_l(G⊙H) = n·dim_{A,l}(H) and the local dichotomy offset. H must have an edge.
    auto verify_corona_local(const Graph & g, const Graph & h, SearchLimits limits = {}) -> TheoremReport;

    /// dim(G) >= n - t, and dim_A(G) = dim(G) = n - t when no twin class is a singleton. G connected.
    auto verify_twin_theorem(const Graph & g, SearchLimits limits = {}) -> TheoremReport;

    /**
     * True-twin class count of G⊠H against n_1·t' + n'_1·t + t·t', all other
     * classes singleton, and the dimension bounds that follow. G, H connected.
     */
    auto verify_strong_twin_lemma(const Graph & g, const Graph & h, SearchLimits limits = {}) -> TheoremReport;
}

#endif
