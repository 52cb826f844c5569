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
#include <graphdim/theorems.hh>

#include <algorithm>

using std::optional;
using std::string;
using std::vector;

namespace graphdim
{
    namespace
    {
        auto dominating(const Graph & h, const vector<unsigned> & set) -> bool
        {
            return is_dominating(h, VertexSet(h.order(), set));
        }

        /// Least v outside S with S ⊆ N(v).
        auto covering_vertex(const Graph & h, const vector<unsigned> & set) -> optional<unsigned>
        {
            VertexSet s(h.order(), set);
            for (unsigned v = 0; v < h.order(); ++v)
                if (! s.test(v) && s.is_subset_of(h.row(v)))
                    return v;
            return std::nullopt;
        }

        auto require_corona_factors(const Graph & g, const Graph & h) -> void
        {
            if (g.order() < 2 || ! is_connected(g))
                throw std::invalid_argument("the first corona factor must be connected of order at least 2");
            if (h.order() < 2)
                throw std::invalid_argument("the second corona factor must have at least 2 vertices");
        }

        auto evaluate_cases(const Graph & h, SearchLimits limits) -> CoronaAdjCase
        {
            using Case = CoronaAdjCase::Case;
            auto bases = enumerate_min_bases(h, DimensionVariant::adjacency(), limits);

            CoronaAdjCase result;
            result.dimension = bases.front().size();
            result.basis_count = bases.size();

            bool dominating_uncovered = false, every_basis_covered = true, every_dominating_covered = true;
            optional<vector<unsigned>> any_uncovered;
            for (auto & s : bases) {
                bool dom = dominating(h, s);
                auto cover = covering_vertex(h, s);
                if (dom && ! result.dominating_basis)
                    result.dominating_basis = s;
                if (! dom && ! result.non_dominating_basis)
                    result.non_dominating_basis = s;
                if (cover && ! result.covered_basis)
                    result.covered_basis = CoveredBasis{s, *cover};
                if (! cover) {
                    every_basis_covered = false;
                    if (! any_uncovered)
                        any_uncovered = s;
                    if (dom) {
                        every_dominating_covered = false;
                        if (! dominating_uncovered)
                            result.uncovered_basis = s;
                        dominating_uncovered = true;
                    }
                }
            }
            if (! result.uncovered_basis)
                result.uncovered_basis = any_uncovered;

            bool some_dominating = result.dominating_basis.has_value();
            bool some_non_dominating = result.non_dominating_basis.has_value();
            if (some_dominating && dominating_uncovered)
                result.fired.push_back(Case::A);
            if (some_dominating && every_basis_covered)
                result.fired.push_back(Case::B);
            if (! some_dominating)
                result.fired.push_back(Case::C);
            if (some_dominating && some_non_dominating && every_dominating_covered && any_uncovered)
                result.fired.push_back(Case::D);
            if (! result.fired.empty())
                result.kind = result.fired.front();
            return result;
        }

        auto fired_names(const CoronaAdjCase & c) -> string
        {
            string names;
            for (auto k : c.fired)
                names += (names.empty() ? "" : ",") + to_string(k);
            return names.empty() ? "none" : names;
        }

        struct Offset
        {
            unsigned value;
            vector<unsigned> witness;
        };

        auto case_offset(const Graph & g, CoronaAdjCase::Case kind, SearchLimits limits) -> Offset
        {
            switch (kind) {
                case CoronaAdjCase::Case::A: return {0, {}};
                case CoronaAdjCase::Case::B: {
                    auto gamma = domination_number(g, limits);
                    return {gamma.value, gamma.witness};
                }
                case CoronaAdjCase::Case::C: return {g.order() - 1, {}};
                case CoronaAdjCase::Case::D: {
                    auto gp = gamma_prime(g, limits);
                    return {gp.value, gp.witness};
                }
            }
            return {0, {}};
        }
    }

    auto to_string(CoronaAdjCase::Case c) -> string
    {
        switch (c) {
            case CoronaAdjCase::Case::A: return "A";
            case CoronaAdjCase::Case::B: return "B";
            case CoronaAdjCase::Case::C: return "C";
            case CoronaAdjCase::Case::D: return "D";
        }
        return "?";
    }

    auto to_string(LocalCoronaCase::Case c) -> string
    {
        return c == LocalCoronaCase::Case::A ? "local-A" : "local-B";
    }

    auto classify_corona_adjacency(const Graph & h, SearchLimits limits) -> CoronaAdjCase
    {
        if (h.order() < 2)
            throw std::invalid_argument("corona classification needs a graph with at least 2 vertices");
        auto result = evaluate_cases(h, limits);
        if (result.fired.size() != 1)
            throw CaseConflict("corona case hypotheses fired: " + fired_names(result));
        return result;
    }

    auto classify_corona_local(const Graph & h, SearchLimits limits) -> LocalCoronaCase
    {
        if (h.order() < 2)
            throw std::invalid_argument("corona classification needs a graph with at least 2 vertices");
        auto bases = enumerate_min_bases(h, DimensionVariant::local_adjacency(), limits);
        LocalCoronaCase result;
        result.dimension = bases.front().size();
        result.basis_count = bases.size();
        for (auto & s : bases) {
            auto cover = covering_vertex(h, s);
            if (! cover && ! result.uncovered_basis)
                result.uncovered_basis = s;
            if (cover && ! result.covered_basis)
                result.covered_basis = CoveredBasis{s, *cover};
        }
        result.kind = result.uncovered_basis ? LocalCoronaCase::Case::A : LocalCoronaCase::Case::B;
        return result;
    }

    auto predict_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits) -> CoronaPrediction
    {
        require_corona_factors(g, h);
        CoronaPrediction p;
        p.classification = classify_corona_adjacency(h, limits);
        auto offset = case_offset(g, p.classification.kind, limits);
        p.offset = offset.value;
        p.offset_witness = offset.witness;
        p.value = g.order() * p.classification.dimension + p.offset;
        return p;
    }

    auto predicted_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits) -> unsigned
    {
        return predict_corona_adjacency(g, h, limits).value;
    }

    auto TheoremReport::holds() const -> bool
    {
        return std::all_of(clauses.begin(), clauses.end(), [](const ClauseCheck & c) { return c.holds; });
    }

    auto TheoremReport::add(string clause, long long expected, long long actual, ClauseCheck::Relation relation) -> void
    {
        bool ok = relation == ClauseCheck::Relation::equal ? actual == expected : actual >= expected;
        clauses.push_back(ClauseCheck{std::move(clause), relation, expected, actual, ok});
    }

    auto verify_corona_dim(const Graph & g, const Graph & h, SearchLimits limits) -> TheoremReport
    {
        require_corona_factors(g, h);
        auto product = corona(g, h);
        auto lhs = dimension(product.graph, DimensionVariant::metric(), limits);
        auto hd = dimension(h, DimensionVariant::adjacency(), limits);

        TheoremReport r{"corona-dim", {}, {}, {}, {}};
        r.add("dim(G⊙H) = n·dim_A(H)", static_cast<long long>(g.order()) * hd.value, lhs.value);
        r.certificates = {{"G⊙H", lhs}, {"H", hd}};
        return r;
    }

    auto verify_corona_adjacency(const Graph & g, const Graph & h, SearchLimits limits) -> TheoremReport
    {
        require_corona_factors(g, h);
        auto product = corona(g, h);
        auto adim = dimension(product.graph, DimensionVariant::adjacency(), limits);
        auto dim = dimension(product.graph, DimensionVariant::metric(), limits);
        auto cases = evaluate_cases(h, limits);
        unsigned n = g.order();

        TheoremReport r{"corona-adim", {}, {}, {}, {}};
        r.add("exactly one case hypothesis holds for H (fired: " + fired_names(cases) + ")", 1, cases.fired.size());
        r.certificates = {{"G⊙H adjacency", adim}, {"G⊙H metric", dim}};
        if (cases.fired.size() == 1) {
            auto offset = case_offset(g, cases.kind, limits);
            r.case_label = to_string(cases.kind);
            r.add("dim_A(G⊙H) = n·dim_A(H) + offset for case " + r.case_label, static_cast<long long>(n) * cases.dimension + offset.value,
                adim.value);
            r.witnesses.emplace_back("offset", offset.witness);
        }
        bool case_a = cases.fired.size() == 1 && cases.kind == CoronaAdjCase::Case::A;
        r.add("case A ⇔ dim_A(G⊙H) = dim(G⊙H)", case_a, adim.value == dim.value);
        if (n >= 3) {
            bool case_c = cases.fired.size() == 1 && cases.kind == CoronaAdjCase::Case::C;
            r.add("case C ⇔ dim_A(G⊙H) = dim(G⊙H) + n - 1", case_c, adim.value == dim.value + n - 1);
        }
        if (cases.dominating_basis)
            r.witnesses.emplace_back("dominating basis of H", *cases.dominating_basis);
        if (cases.non_dominating_basis)
            r.witnesses.emplace_back("non-dominating basis of H", *cases.non_dominating_basis);
        if (cases.uncovered_basis)
            r.witnesses.emplace_back("basis of H in no neighbourhood", *cases.uncovered_basis);
        if (cases.covered_basis) {
            auto evidence = cases.covered_basis->basis;
            evidence.push_back(cases.covered_basis->vertex);
            r.witnesses.emplace_back("basis of H followed by a vertex whose neighbourhood contains it", evidence);
        }
        return r;
    }

    auto verify_corona_local(const Graph & g, const Graph & h, SearchLimits limits) -> TheoremReport
    {
        require_corona_factors(g, h);
        if (h.size() == 0)
            throw std::invalid_argument("the local corona identities need a second factor with at least one edge");
        auto product = corona(g, h);
        auto ldim = dimension(product.graph, DimensionVariant::local_metric(), limits);
        auto ladim = dimension(product.graph, DimensionVariant::local_adjacency(), limits);
        auto cls = classify_corona_local(h, limits);
        auto gamma = domination_number(g, limits);
        long long base = static_cast<long long>(g.order()) * cls.dimension;

        TheoremReport r{"corona-local", {}, to_string(cls.kind), {}, {}};
        r.add("dim_l(G⊙H) = n·dim_{A,l}(H)", base, ldim.value);
        long long offset = cls.kind == LocalCoronaCase::Case::A ? 0 : gamma.value;
        r.add("dim_{A,l}(G⊙H) = n·dim_{A,l}(H) + offset for case " + r.case_label, base + offset, ladim.value);
        long long diff = static_cast<long long>(ladim.value) - base;
        r.add("dim_{A,l}(G⊙H) - n·dim_{A,l}(H) ∈ {0, γ(G)}", 1, diff == 0 || diff == gamma.value);
        r.add("case local-A ⇔ dim_l(G⊙H) = dim_{A,l}(G⊙H)", cls.kind == LocalCoronaCase::Case::A, ldim.value == ladim.value);
        r.certificates = {{"G⊙H local metric", ldim}, {"G⊙H local adjacency", ladim}};
        r.witnesses.emplace_back("dominating set of G", gamma.witness);
        if (cls.uncovered_basis)
            r.witnesses.emplace_back("local basis of H in no neighbourhood", *cls.uncovered_basis);
        if (cls.covered_basis) {
            auto evidence = cls.covered_basis->basis;
            evidence.push_back(cls.covered_basis->vertex);
            r.witnesses.emplace_back("local basis of H followed by a vertex whose neighbourhood contains it", evidence);
        }
        return r;
    }

    auto verify_twin_theorem(const Graph & g, SearchLimits limits) -> TheoremReport
    {
        if (! is_connected(g))
            throw DisconnectedGraph("the twin theorem needs a connected graph");
        auto parts = twin_partition(g);
        long long bound = g.order() - parts.class_count();
        auto dim = dimension(g, DimensionVariant::metric(), limits);

        TheoremReport r{"twin", {}, {}, {}, {}};
        r.add("dim(G) >= n - t", bound, dim.value, ClauseCheck::Relation::at_least);
        r.certificates.emplace_back("G metric", dim);
        if (! parts.has_singleton()) {
            auto adim = dimension(g, DimensionVariant::adjacency(), limits);
            r.add("dim_A(G) = n - t", bound, adim.value);
            r.add("dim(G) = n - t", bound, dim.value);
            r.certificates.emplace_back("G adjacency", adim);
        }
        return r;
    }

    auto verify_strong_twin_lemma(const Graph & g, const Graph & h, SearchLimits limits) -> TheoremReport
    {
        if (! is_connected(g) || ! is_connected(h) || g.order() < 2 || h.order() < 2)
            throw std::invalid_argument("the strong product twin lemma needs connected factors of order at least 2");

        struct Counts
        {
            long long n, t, n1;
        };
        auto counts = [](const Graph & x) {
            auto parts = twin_partition(x);
            long long in_true = 0;
            for (auto & c : parts.classes)
                if (c.kind == TwinKind::true_twin)
                    in_true += c.members.size();
            return Counts{x.order(), parts.count(TwinKind::true_twin), x.order() - in_true};
        };
        auto [n, t, n1] = counts(g);
        auto [m, u, m1] = counts(h);

        auto product = strong(g, h);
        auto parts = twin_partition(product);
        auto dim = dimension(product, DimensionVariant::metric(), limits);

        TheoremReport r{"strong-twin", {}, {}, {}, {}};
        r.add("true-twin classes of G⊠H = n_1·t' + n'_1·t + t·t'", n1 * u + m1 * t + t * u, parts.count(TwinKind::true_twin));
        r.add("false-twin classes of G⊠H = 0", 0, parts.count(TwinKind::false_twin));
        r.add("dim(G⊠H) >= nn' - n_1·t' - n'_1·t - t·t' - n_1·n'_1", n * m - n1 * u - m1 * t - t * u - n1 * m1, dim.value,
            ClauseCheck::Relation::at_least);
        r.certificates.emplace_back("G⊠H metric", dim);
        if (n1 == 0) {
            auto adim = dimension(product, DimensionVariant::adjacency(), limits);
            r.add("dim_A(G⊠H) = nn' - n'_1·t - t·t'", n * m - m1 * t - t * u, adim.value);
            r.add("dim(G⊠H) = nn' - n'_1·t - t·t'", n * m - m1 * t - t * u, dim.value);
            r.certificates.emplace_back("G⊠H adjacency", adim);
        }
        return r;
    }
}
