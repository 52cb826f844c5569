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

#ifndef GRAPHDIM_REDUCTIONS_HH
#define GRAPHDIM_REDUCTIONS_HH

#include <graphdim/graph.hh>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphdim
{
    class FormulaError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Literals are DIMACS style: +v or -v for variable v in 1..variables.
    struct CnfFormula
    {
        unsigned variables = 0;
        std::vector<std::array<int, 3>> clauses;

        friend auto operator==(const CnfFormula &, const CnfFormula &) -> bool = default;
    };

    /**
     * Throws FormulaError unless every clause has three literals over distinct
     * variables in range and every variable occurs both positively and
     * negatively.
     */
    auto validate(const CnfFormula & f) -> void;

    /// Reads `p cnf n m` and m zero-terminated clause lines; `c` lines are comments.
    auto parse_dimacs(std::istream & in) -> CnfFormula;
    auto to_dimacs(const CnfFormula & f) -> std::string;

    /// Bit v-1 of the assignment is the value of variable v.
    auto satisfies(const CnfFormula & f, std::uint32_t assignment) -> bool;

    /// Tries all 2^n assignments; throws FormulaError above `cap` variables.
    auto satisfying_assignment(const CnfFormula & f, unsigned cap = 16) -> std::optional<std::uint32_t>;
    auto sat_bruteforce(const CnfFormula & f, unsigned cap = 16) -> bool;

    enum class Role
    {
        original,
        literal_vertex,
        clause_literal,
        variable_path,
        clause_gadget,
        triangle_added,
        interconnect,
        isolated,
        anchor,
        copy
    };

    auto to_string(Role) -> std::string;

    struct ReductionInstance
    {
        Graph graph;
        unsigned budget = 0;
        std::vector<Role> roles;
        std::vector<std::string> provenance;
    };

    /**
     * Vertex cover from 3-SAT: variable v has literal vertices 2(v-1) (positive)
     * and 2(v-1)+1 (negative) joined by an edge; clause j is a triangle on
     * 2n+3j .. 2n+3j+2, each joined to the variable vertex of its literal.
     * Budget n + 2m.
     */
    auto vc_from_3sat(const CnfFormula & f) -> ReductionInstance;

    /// Each edge uv gains an apex adjacent to u and v; apexes follow the original vertices in edge order.
    struct TriangleConstruction
    {
        Graph graph;
        std::vector<Role> roles;
    };

    auto triangle_construction(const Graph & g) -> TriangleConstruction;

    /// Dominating set instance from a vertex cover instance: the triangle construction with the same budget.
    auto dom_from_vc(const ReductionInstance & vc) -> ReductionInstance;

    /// 1-locating dominating set from 3-SAT: vc_from_3sat followed by the triangle construction. Budget n + 2m.
    auto locdom_from_3sat(const CnfFormula & f) -> ReductionInstance;

    /// Adds one isolated vertex; same budget.
    auto adjdim_from_locdom(const Graph & g, unsigned k) -> ReductionInstance;
    auto adjdim_from_locdom(const ReductionInstance & locdom) -> ReductionInstance;

    /// (K_2 ⊙ H, 2k). H needs at least two vertices.
    auto dim_from_adjdim(const Graph & h, unsigned k) -> ReductionInstance;
    auto dim_from_adjdim(const ReductionInstance & adjdim) -> ReductionInstance;

    /// (G ⊙ K_2, n + k). G connected of order at least 2.
    auto locadjdim_from_dom(const Graph & g, unsigned k) -> ReductionInstance;
    auto locadjdim_from_dom(const ReductionInstance & dom) -> ReductionInstance;

    /**
     * Local adjacency dimension from 3-SAT: variable v is the induced path
     * 4(v-1) .. 4(v-1)+3 whose middle vertices are the positive and negative
     * literal vertices; clause j is a copy of the clause gadget at 4n+9j whose
     * outer vertex i is joined to the literal vertex of the clause's i-th
     * variable in ascending order. Budget n + 2m.
     */
    auto locadjdim_from_3sat(const CnfFormula & f) -> ReductionInstance;

    /// The frozen nine-vertex clause gadget; vertices 0, 1, 2 are the outer vertices.
    auto clause_gadget() -> const std::vector<Edge> &;

    struct GadgetCertificate
    {
        /// No set with at most one inner vertex separates the gadget edges, even with all three stubs.
        bool inner_pair_needed = false;
        /// For each non-empty stub pattern (bit i = stub i), two inner vertices that complete it.
        std::vector<std::pair<unsigned, std::array<unsigned, 2>>> completions;
        bool every_pattern_completes = false;
        /// No two gadget vertices separate the gadget edges without a stub.
        bool no_pair_without_stub = false;
        /// Every local adjacency basis of gadget plus pendant stubs has two or more gadget vertices.
        bool bases_use_two_gadget_vertices = false;

        auto holds() const -> bool
        {
            return inner_pair_needed && every_pattern_completes && no_pair_without_stub && bases_use_two_gadget_vertices;
        }
    };

    /**
     * Gadget edges must be separated by a set made of gadget vertices and
     * literal stubs, stub i being adjacent to outer vertex i only.
     */
    auto certify_clause_gadget(const std::vector<Edge> & gadget) -> GadgetCertificate;

    /**
     * Candidate gadgets invariant under rotating the outer vertices 0 -> 1 -> 2
     * together with inner vertices 3 -> 4 -> 5 and 6 -> 7 -> 8: unions of edge
     * orbits of the given total size, in lexicographic order of orbit choice,
     * keeping connected ones whose certificate holds.
     */
    auto search_clause_gadgets(unsigned edge_count = 15, std::size_t limit = 0) -> std::vector<std::vector<Edge>>;
}

#endif
