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
#include <graphdim/parameters.hh>
#include <graphdim/reductions.hh>

#include <algorithm>
#include <sstream>

using namespace graphdim;

namespace
{
    auto formula(unsigned n, std::vector<std::array<int, 3>> clauses) -> CnfFormula { return CnfFormula{n, std::move(clauses)}; }

    const auto f32 = formula(3, {{1, 2, 3}, {-1, -2, -3}});
    const auto f43 = formula(4, {{1, -2, 3}, {-1, 2, 4}, {-3, -4, 2}});
}

TEST_CASE("formula validation")
{
    CHECK_NOTHROW(validate(f32));
    CHECK_THROWS_AS(validate(formula(3, {{1, 2, 3}})), FormulaError);
    CHECK_THROWS_AS(validate(formula(2, {{1, -1, 2}, {-1, -2, 1}})), FormulaError);
    CHECK_THROWS_AS(validate(formula(3, {{1, 2, 4}, {-1, -2, -3}})), FormulaError);
    CHECK_THROWS_AS(validate(formula(3, {{1, 0, 3}, {-1, -2, -3}})), FormulaError);
    CHECK_THROWS_AS(validate(formula(0, {})), FormulaError);
    CHECK_THROWS_WITH_AS(validate(formula(4, {{1, 2, 3}, {-1, -2, -3}})), "variable 4 never occurs positively", FormulaError);
}

TEST_CASE("brute force satisfiability")
{
    CHECK(sat_bruteforce(formula(3, {{1, 2, 3}})));
    CnfFormula all{3, {}};
    for (int s = 0; s < 8; ++s)
        all.clauses.push_back({s & 1 ? 1 : -1, s & 2 ? 2 : -2, s & 4 ? 3 : -3});
    CHECK(! sat_bruteforce(all));
    auto a = satisfying_assignment(f32);
    REQUIRE(a);
    CHECK(satisfies(f32, *a));
    CHECK_THROWS_AS(sat_bruteforce(CnfFormula{17, {}}), FormulaError);
    CHECK_THROWS_AS(sat_bruteforce(CnfFormula{5, {}}, 4), FormulaError);
}

TEST_CASE("DIMACS round trip and diagnostics")
{
    std::istringstream in("c example\np cnf 3 2\n1 2 3 0\n-1 -2\n-3 0\n");
    auto f = parse_dimacs(in);
    CHECK(f == f32);
    std::istringstream again(to_dimacs(f));
    CHECK(parse_dimacs(again) == f);

    auto fails = [](const char * text) {
        std::istringstream s(text);
        CHECK_THROWS_AS(parse_dimacs(s), FormulaError);
    };
    fails("1 2 3 0\n");
    fails("p cnf 3 1\n1 2 0\n");
    fails("p cnf 3 2\n1 2 3 0\n");
    fails("p cnf 3 1\n1 2 x 0\n");
    fails("p cnf 3 1\n1 2 3\n");
    fails("p dnf 3 1\n1 2 3 0\n");
}

TEST_CASE("vertex cover construction")
{
    auto r = vc_from_3sat(f32);
    CHECK(r.graph.order() == 12);
    CHECK(r.graph.size() == 15);
    CHECK(r.budget == 7);
    CHECK(r.roles.size() == 12);
    CHECK(r.roles[0] == Role::literal_vertex);
    CHECK(r.roles[6] == Role::clause_literal);
    CHECK(r.graph.adjacent(6, 0));
    CHECK(r.graph.adjacent(9, 1));
    CHECK(r.provenance == std::vector<std::string>{"3sat", "vertex-cover"});
    CHECK(vertex_cover_number(r.graph).value == 7);
}

TEST_CASE("triangle construction")
{
    auto p3 = triangle_construction(path(3));
    CHECK(p3.graph.order() == 5);
    CHECK(p3.graph.size() == 6);
    CHECK(p3.roles[3] == Role::triangle_added);
    auto k3 = triangle_construction(complete(3));
    CHECK(k3.graph.order() == 6);
    CHECK(k3.graph.size() == 9);
}

TEST_CASE("domination of the triangle construction equals the vertex cover number without isolated vertices")
{
    for (unsigned n = 2; n <= 6; ++n)
        for (auto & g : oracle::graphs_of_order(n)) {
            bool isolated = false;
            for (unsigned v = 0; v < n; ++v)
                isolated = isolated || g.degree(v) == 0;
            if (isolated)
                continue;
            auto beta = vertex_cover_number(g).value;
            auto t = triangle_construction(g).graph;
            CHECK(domination_number(t).value == beta);
        }
}

TEST_CASE("1-locating dominating construction")
{
    auto a = locdom_from_3sat(f32);
    CHECK(a.graph.order() == 27);
    CHECK(a.graph.size() == 45);
    CHECK(a.budget == 7);
    CHECK(std::count(a.roles.begin(), a.roles.end(), Role::interconnect) == 6);
    CHECK(std::count(a.roles.begin(), a.roles.end(), Role::triangle_added) == 3 + 6);
    CHECK(a.provenance.size() == 3);
}

TEST_CASE("isolated vertex construction")
{
    auto r = adjdim_from_locdom(path(4), 2);
    CHECK(r.graph.order() == 5);
    CHECK(r.graph.size() == 3);
    CHECK(r.roles.back() == Role::isolated);
    CHECK(has_generator_of_size(r.graph, DimensionVariant::adjacency(), 2) == (min_locating_dominating(path(4)).value <= 2));
    CHECK(dimension(adjdim_from_locdom(complete(3), 2).graph, DimensionVariant::adjacency()).value == 2);

    for (unsigned n = 1; n <= 6; ++n)
        for (auto & g : oracle::graphs_of_order(n))
            CHECK(dimension_value(adjdim_from_locdom(g, 0).graph, DimensionVariant::adjacency())
                == min_locating_dominating(g).value);
}

TEST_CASE("corona with K_2 doubles the adjacency dimension")
{
    auto a = dim_from_adjdim(path(3), 1);
    CHECK(a.budget == 2);
    CHECK(dimension(a.graph, DimensionVariant::metric()).value == 2);
    auto b = dim_from_adjdim(complete(3), 2);
    CHECK(dimension(b.graph, DimensionVariant::metric()).value == 4);
    CHECK(b.roles[0] == Role::anchor);
    CHECK(b.roles[2] == Role::copy);
    CHECK_THROWS_AS(dim_from_adjdim(path(1), 0), std::invalid_argument);

    for (unsigned n = 2; n <= 5; ++n)
        for (auto & h : oracle::graphs_of_order(n)) {
            auto k = dimension_value(h, DimensionVariant::adjacency());
            auto r = dim_from_adjdim(h, k);
            CHECK(has_generator_of_size(r.graph, DimensionVariant::metric(), r.budget));
            CHECK(! has_generator_of_size(r.graph, DimensionVariant::metric(), r.budget - 1));
        }
}

TEST_CASE("corona with K_2 adds the order to the domination number")
{
    CHECK(dimension(locadjdim_from_dom(path(4), 2).graph, DimensionVariant::local_adjacency()).value == 6);
    CHECK(dimension(locadjdim_from_dom(complete(3), 1).graph, DimensionVariant::local_adjacency()).value == 4);
    CHECK_THROWS_AS(locadjdim_from_dom(null_graph(2), 1), std::invalid_argument);

    for (unsigned n = 2; n <= 5; ++n)
        for (auto & g : oracle::connected_graphs_of_order(n)) {
            auto gamma = domination_number(g).value;
            auto yes = locadjdim_from_dom(g, gamma);
            auto no = locadjdim_from_dom(g, gamma - 1);
            CHECK(has_generator_of_size(yes.graph, DimensionVariant::local_adjacency(), yes.budget));
            CHECK(! has_generator_of_size(no.graph, DimensionVariant::local_adjacency(), no.budget));
        }
}

TEST_CASE("clause gadget construction")
{
    auto r = locadjdim_from_3sat(f32);
    CHECK(r.graph.order() == 30);
    CHECK(r.graph.size() == 45);
    CHECK(r.budget == 7);
    CHECK(r.roles[0] == Role::variable_path);
    CHECK(r.roles[1] == Role::literal_vertex);
    CHECK(r.roles[12] == Role::clause_gadget);
    // First clause (x1 ∨ x2 ∨ x3): outer i meets the positive literal of variable i + 1.
    CHECK(r.graph.adjacent(1, 12));
    CHECK(r.graph.adjacent(5, 13));
    CHECK(r.graph.adjacent(9, 14));
    // Second clause is all negative.
    CHECK(r.graph.adjacent(2, 21));
    CHECK(r.graph.adjacent(10, 23));

    auto order43 = locadjdim_from_3sat(f43);
    CHECK(order43.graph.order() == 4 * 4 + 9 * 3);
    CHECK(order43.graph.size() == 3 * 4 + 18 * 3);
}

TEST_CASE("the frozen clause gadget carries its certificate")
{
    auto cert = certify_clause_gadget(clause_gadget());
    CHECK(cert.inner_pair_needed);
    CHECK(cert.every_pattern_completes);
    CHECK(cert.no_pair_without_stub);
    CHECK(cert.bases_use_two_gadget_vertices);
    CHECK(cert.completions.size() == 7);
    CHECK(clause_gadget().size() == 15);
}

TEST_CASE("the gadget search finds the frozen gadget first")
{
    auto found = search_clause_gadgets(15, 1);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == clause_gadget());
}

TEST_CASE("a gadget missing its inner structure fails the certificate")
{
    CHECK(! certify_clause_gadget({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}).holds());
}
