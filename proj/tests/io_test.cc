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
#include <graphdim/io.hh>

#include <random>
#include <sstream>

using namespace graphdim;

namespace
{
    auto read(const std::string & text) -> Graph
    {
        std::istringstream in(text);
        return read_edge_list(in);
    }
}

TEST_CASE("edge lists read with comments and blank lines")
{
    auto g = read("# a path\n4 3\n\n0 1   # first\n1 2\n2 3\n");
    CHECK(g == path(4));
    CHECK(read("3 3\n0 1\n1 0\n1 2\n").size() == 2);
    CHECK(read("1 0\n").order() == 1);
}

TEST_CASE("malformed edge lists are rejected with a line number")
{
    CHECK_THROWS_AS(read(""), ParseError);
    CHECK_THROWS_AS(read("# only comments\n"), ParseError);
    CHECK_THROWS_AS(read("3\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(read("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read("3 1\n-1 2\n"), ParseError);
    try {
        read("3 2\n0 1\n1 7\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).starts_with("line 3"));
    }
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("edge lists round trip byte for byte")
{
    std::mt19937_64 rng(17);
    for (unsigned n = 1; n <= 12; ++n) {
        auto g = oracle::random_graph(n, rng);
        auto text = write_edge_list(g);
        auto back = read(text);
        CHECK(back == g);
        CHECK(write_edge_list(back) == text);
    }
    CHECK(write_edge_list(path(3)) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("graph specs build the named families and products")
{
    CHECK(parse_graph_spec("path:7") == path(7));
    CHECK(parse_graph_spec("complete_bipartite:2:3") == complete_bipartite(2, 3));
    CHECK(parse_graph_spec(" wheel : 8 ") == wheel(8));
    CHECK(parse_graph_spec("corona(path:4,path:5)") == corona(path(4), path(5)).graph);
    CHECK(parse_graph_spec("corona(path:4,path:5)").order() == 24);
    CHECK(parse_graph_spec("strong(complete:3,path:3)") == strong(complete(3), path(3)));
    CHECK(parse_graph_spec("strong(path:2,path:3,path:2)") == strong(strong(path(2), path(3)), path(2)));
    CHECK(parse_graph_spec("union(complete:2,complete:3)") == disjoint_union(complete(2), complete(3)));
    CHECK(parse_graph_spec("join(complete:1,cycle:4)") == wheel(5));
    CHECK(parse_graph_spec("complement(complete:3)") == null_graph(3));
    CHECK(parse_graph_spec("join(complete:2,union(complete:1,complete:2))") ==
          join(complete(2), disjoint_union(complete(1), complete(2))));
    CHECK(parse_graph_spec("corona(strong(path:2,path:2),complement(path:4))") ==
          corona(strong(path(2), path(2)), complement(path(4))).graph);
}

TEST_CASE("malformed graph specs are rejected")
{
    for (auto bad : {"", "cycle:2", "path", "path:", "path:x", "triangle:3", "corona(path:3)", "corona(path:2,path:2,path:2)",
             "complement(path:2,path:3)", "strong(path:3)", "union(path:2,", "path:3)", "path:3,path:4", "wheel:3",
             "complete_bipartite:2", "join()"})
        CHECK_THROWS_AS(parse_graph_spec(bad), ParseError);
}

TEST_CASE("graph hash is FNV-1a of the canonical edge list")
{
    // FNV-1a 64 of "1 0\n", computed by hand from the offset basis and prime.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : std::string("1 0\n")) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char expected[17];
    std::snprintf(expected, sizeof expected, "%016llx", static_cast<unsigned long long>(h));
    CHECK(graph_hash(complete(1)) == expected);
    CHECK(graph_hash(path(4)).size() == 16);
    CHECK(graph_hash(path(4)) == graph_hash(read("4 3\n2 3\n1 0\n2 1\n")));
    CHECK(graph_hash(path(4)) != graph_hash(cycle(4)));
}

TEST_CASE("certificates serialise with the documented fields")
{
    auto g = path(7);
    auto j = to_json(dimension(g, DimensionVariant::adjacency()), g);
    CHECK(j.dump() == R"({"variant":"adim","value":3,"witness":[0,2,4],"exhaustive":true,"graph_hash":")" + graph_hash(g) + "\"}");

    auto p = to_json(domination_number(g), g);
    CHECK(p["parameter"] == "gamma");
    CHECK(p["value"] == 3);
}

TEST_CASE("theorem reports and reduction sidecars serialise")
{
    auto report = verify_corona_adjacency(path(4), path(5));
    auto j = to_json(report);
    CHECK(j["theorem"] == "corona-adim");
    CHECK(j["holds"] == true);
    CHECK(j["case"] == "D");
    REQUIRE(j["clauses"].size() == report.clauses.size());
    for (auto & c : j["clauses"])
        CHECK(c["expected"] == c["actual"]);

    CnfFormula f{3, {{1, 2, 3}, {-1, -2, -3}}};
    auto sidecar = to_json(vc_from_3sat(f));
    CHECK(sidecar["budget"] == 7);
    CHECK(sidecar["order"] == 12);
    CHECK(sidecar["roles"].size() == 12);
    CHECK(sidecar["roles"][0] == "literal-vertex");
    CHECK(sidecar["provenance"] == nlohmann::ordered_json::array({"3sat", "vertex-cover"}));
}

TEST_CASE("DOT output lists vertices, edges and highlights")
{
    auto dot = to_dot(path(3), {1});
    CHECK(dot == "graph G {\n  0;\n  1 [style=filled, fillcolor=black, fontcolor=white];\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}
