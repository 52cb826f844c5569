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

#include <graphdim/construct.hh>
#include <graphdim/dimension.hh>

#include <random>

using namespace graphdim;

namespace
{
    const auto dim = DimensionVariant::metric();
    const auto adim = DimensionVariant::adjacency();
    const auto ldim = DimensionVariant::local_metric();
    const auto ladim = DimensionVariant::local_adjacency();

    auto oracle_kind(DimensionVariant v) -> oracle::Kind
    {
        switch (v.kind()) {
            case DimensionVariant::Kind::adjacency: return oracle::Kind::adjacency;
            case DimensionVariant::Kind::local_metric: return oracle::Kind::local_metric;
            case DimensionVariant::Kind::local_adjacency: return oracle::Kind::local_adjacency;
            default: return oracle::Kind::metric;
        }
    }
}

TEST_CASE("variant names parse and print")
{
    for (auto name : {"dim", "adim", "ldim", "ladim", "trunc:1", "trunc:5"})
        CHECK(DimensionVariant::parse(name).name() == name);
    CHECK_THROWS_AS(DimensionVariant::parse("trunc:0"), std::invalid_argument);
    CHECK_THROWS_AS(DimensionVariant::parse("trunc:"), std::invalid_argument);
    CHECK_THROWS_AS(DimensionVariant::parse("trunc:2x"), std::invalid_argument);
    CHECK_THROWS_AS(DimensionVariant::parse("metric"), std::invalid_argument);
    CHECK_THROWS_AS(DimensionVariant::truncated(0), std::invalid_argument);
    CHECK(DimensionVariant::truncated(3).truncation() == 3);
}

TEST_CASE("generator predicate")
{
    CHECK(is_generator(path(4), std::vector<unsigned>{0}, dim));
    CHECK(! is_generator(complete(3), std::vector<unsigned>{0}, adim));
    CHECK(is_generator(cycle(4), std::vector<unsigned>{0, 1}, ladim));
    CHECK(! is_generator(cycle(4), std::vector<unsigned>{0}, dim));
    CHECK_THROWS_AS(is_generator(null_graph(2), std::vector<unsigned>{0}, dim), DisconnectedGraph);
    CHECK(is_generator(null_graph(3), std::vector<unsigned>{0, 1}, adim));
    CHECK_THROWS_AS(is_generator(path(3), std::vector<unsigned>{3}, dim), GraphError);
}

TEST_CASE("known values")
{
    CHECK(dimension(path(7), adim).value == 3);
    CHECK(dimension(star(4), dim).value == 3);
    CHECK(dimension(cycle(8), ladim).value == 2);
    CHECK(dimension(star(3), ladim).value == 1);
    CHECK(dimension(path(5), adim).value == 2);
    CHECK(dimension(path(4), dim).value == 1);
    CHECK(dimension(path(4), ldim).value == 1);
}

TEST_CASE("conventions for trivial inputs")
{
    for (auto v : {dim, adim, ldim, ladim, DimensionVariant::truncated(2)}) {
        auto c = dimension(path(1), v);
        CHECK(c.value == 0);
        CHECK(c.witness.empty());
        CHECK(c.exhaustive);
    }
    CHECK(dimension(null_graph(4), ladim).value == 0);
    CHECK(dimension(null_graph(4), adim).value == 3);
    CHECK_THROWS_AS(dimension(null_graph(4), ldim), DisconnectedGraph);
    CHECK_THROWS_AS(dimension(null_graph(2), DimensionVariant::truncated(2)), DisconnectedGraph);
}

TEST_CASE("minimum bases")
{
    using Sets = std::vector<std::vector<unsigned>>;
    CHECK(enumerate_min_bases(path(2), adim) == Sets{{0}, {1}});
    CHECK(enumerate_min_bases(star(3), adim) == Sets{{1, 2}, {1, 3}, {2, 3}});

    auto p5 = path(5);
    bool dominating = false, non_dominating = false;
    for (auto & b : enumerate_min_bases(p5, adim)) {
        VertexSet covered(5);
        for (auto v : b)
            covered.union_with(p5.closed_neighborhood(v));
        (covered.count() == 5 ? dominating : non_dominating) = true;
    }
    CHECK(dominating);
    CHECK(non_dominating);
}

TEST_CASE("twin lower bound")
{
    CHECK(twin_lower_bound(complete_bipartite(2, 3)) == 3);
    CHECK(twin_lower_bound(path(4)) == 0);
    CHECK(twin_lower_bound(complete(5)) == 4);
}

TEST_CASE("every variant matches the subset scan on all graphs of order at most 6")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (auto & g : oracle::graphs_of_order(n))
            for (auto v : {dim, adim, ldim, ladim}) {
                if (v.needs_connected() && ! is_connected(g))
                    continue;
                auto ref = oracle::dimension(g, oracle_kind(v));
                auto got = dimension(g, v);
                CHECK(got.value == ref.value);
                CHECK(got.witness == ref.witness);
                CHECK(is_generator(g, got.witness, v));
                CHECK(dimension_value(g, v) == ref.value);
            }
}

TEST_CASE("basis enumeration matches the subset scan")
{
    for (unsigned n = 2; n <= 5; ++n)
        for (auto & g : oracle::connected_graphs_of_order(n))
            for (auto v : {dim, adim, ldim, ladim})
                CHECK(enumerate_min_bases(g, v) == oracle::bases(g, oracle_kind(v)));
}

TEST_CASE("random graphs of order 10 agree with the subset scan")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        auto g = oracle::random_connected_graph(10, rng);
        for (auto v : {dim, adim, ldim, ladim}) {
            auto ref = oracle::dimension(g, oracle_kind(v));
            auto got = dimension(g, v);
            CHECK(got.value == ref.value);
            CHECK(got.witness == ref.witness);
        }
    }
}

TEST_CASE("truncated metrics")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_connected_graph(3 + i % 7, rng);
        CHECK(dimension(g, DimensionVariant::truncated(2)).witness == dimension(g, adim).witness);
        auto diam = *diameter(g);
        CHECK(dimension(g, DimensionVariant::truncated(std::max(diam, 1u))).witness == dimension(g, dim).witness);
        CHECK(dimension(g, DimensionVariant::truncated(1)).value == oracle::dimension(g, oracle::Kind::metric, 1).value);
        CHECK(dimension(g, DimensionVariant::truncated(3)).value == oracle::dimension(g, oracle::Kind::metric, 3).value);
    }
}

TEST_CASE("exhaustive certificates have no smaller generator")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_connected_graph(11, rng);
        auto c = dimension(g, adim);
        CHECK(c.exhaustive);
        CHECK(is_generator(g, c.witness, adim));
        if (c.value > 0)
            CHECK(! has_generator_of_size(g, adim, c.value - 1));
    }
}
