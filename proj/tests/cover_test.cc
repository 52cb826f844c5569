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

#include <doctest.h>

#include "oracle.hh"

#include <graphdim/cover.hh>
#include <graphdim/dimension.hh>

#include <random>

using namespace graphdim;

namespace
{
    auto random_problem(unsigned n, unsigned m, std::mt19937_64 & rng) -> CoverProblem
    {
        CoverProblem p{n, {}, {}};
        for (unsigned i = 0; i < m; ++i) {
            VertexSet c(n);
            c.set(rng() % n);
            for (unsigned v = 0; v < n; ++v)
                if (rng() % 4 == 0)
                    c.set(v);
            p.constraints.push_back(c);
        }
        return p;
    }

    auto hits(const CoverProblem & p, std::uint32_t set) -> bool
    {
        for (auto & c : p.constraints) {
            bool hit = false;
            c.for_each([&](unsigned v) { hit = hit || ((set >> v) & 1); });
            if (! hit)
                return false;
        }
        return true;
    }
}

TEST_CASE("minimum and canonical minimum match a subset scan")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        auto p = random_problem(10, 1 + rng() % 12, rng);
        auto ref = oracle::first_subset(10, [&](std::uint32_t s) { return hits(p, s); });
        CoverSearch search(p);
        CHECK(search.minimum().count() == ref.value);
        CHECK(search.canonical_minimum().members() == ref.witness);
        CHECK(search.lower_bound() <= ref.value);
    }
}

TEST_CASE("enumeration matches a subset scan")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto p = random_problem(9, 1 + rng() % 8, rng);
        auto ref = oracle::all_least_subsets(9, [&](std::uint32_t s) { return hits(p, s); });
        std::vector<std::vector<unsigned>> got;
        for (auto & s : CoverSearch(p).all_minimum())
            got.push_back(s.members());
        CHECK(got == ref);
    }
}

TEST_CASE("forced and allowed restrict decision queries")
{
    CoverProblem p{4, {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}, {}};
    CoverSearch search(p);
    CHECK(search.find(1) == std::nullopt);
    auto r = search.find(2, VertexSet(4, {1}), VertexSet(4, {1, 3}));
    REQUIRE(r);
    CHECK(r->members() == std::vector<unsigned>{1, 3});
    CHECK(! search.find(2, VertexSet(4, {0, 1}), VertexSet::full(4)));
}

TEST_CASE("empty problems have the empty set as minimum")
{
    CoverSearch search(CoverProblem{5, {}, {}});
    CHECK(search.minimum().empty());
    CHECK(search.canonical_minimum().empty());
    CHECK(search.all_minimum().size() == 1);
}

TEST_CASE("a constraint nothing can hit is a logic error")
{
    CoverSearch search(CoverProblem{3, {VertexSet(3)}, {}});
    CHECK_THROWS_AS(search.minimum(), std::logic_error);
}

TEST_CASE("node budgets raise instead of answering")
{
    std::mt19937_64 rng(1);
    auto p = generator_problem(oracle::random_connected_graph(14, rng), DimensionVariant::metric());
    CoverSearch search(p, SearchLimits{5, 1});
    CHECK_THROWS_AS(search.canonical_minimum(), BudgetExceeded);
}

TEST_CASE("results do not depend on the thread count")
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_connected_graph(12, rng);
        auto p = generator_problem(g, DimensionVariant::adjacency());
        auto one = CoverSearch(p, SearchLimits{0, 1}).canonical_minimum();
        auto four = CoverSearch(p, SearchLimits{0, 4}).canonical_minimum();
        CHECK(one == four);
        CHECK(CoverSearch(p, SearchLimits{0, 1}).all_minimum() == CoverSearch(p, SearchLimits{0, 3}).all_minimum());
    }
}

TEST_CASE("greedy cover hits every constraint")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto p = random_problem(12, 10, rng);
        auto g = greedy_cover(p);
        for (auto & c : p.constraints)
            CHECK(c.intersects(g));
    }
}
