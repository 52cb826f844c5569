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
#include <graphdim/dimension.hh>
#include <graphdim/metric.hh>
#include <graphdim/reductions.hh>

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace graphdim
{
    using std::to_string;

    namespace
    {
        auto variable_of(int literal) -> unsigned { return static_cast<unsigned>(std::abs(literal)); }

        auto with_step(vector<string> provenance, string step) -> vector<string>
        {
            provenance.push_back(std::move(step));
            return provenance;
        }

        constexpr unsigned gadget_order = 9;
        constexpr unsigned outer_count = 3;

        // Gadget vertices 0..8 followed by stubs 9, 10, 11; stub i hangs off outer vertex i.
        auto with_stubs(const vector<Edge> & gadget) -> Graph
        {
            auto edges = gadget;
            for (unsigned i = 0; i < outer_count; ++i)
                edges.emplace_back(i, gadget_order + i);
            return Graph::from_edge_list(gadget_order + outer_count, edges);
        }

        auto separates_gadget_edges(const Graph & g, const vector<Edge> & gadget, const VertexSet & s) -> bool
        {
            for (auto [u, v] : gadget) {
                if (s.test(u) || s.test(v))
                    continue;
                bool separated = false;
                s.for_each([&](unsigned w) { separated = separated || adjacency_distinguishes(g, w, u, v); });
                if (! separated)
                    return false;
            }
            return true;
        }

        auto rotate(unsigned v) -> unsigned
        {
            unsigned block = v / 3;
            return block * 3 + (v % 3 + 1) % 3;
        }
    }

    auto validate(const CnfFormula & f) -> void
    {
        if (f.variables == 0)
            throw FormulaError("formula has no variables");
        vector<bool> positive(f.variables + 1), negative(f.variables + 1);
        for (unsigned j = 0; j < f.clauses.size(); ++j) {
            std::set<unsigned> seen;
            for (auto lit : f.clauses[j]) {
                auto v = variable_of(lit);
                if (lit == 0 || v > f.variables)
                    throw FormulaError("clause " + to_string(j + 1) + " has literal " + to_string(lit) + " outside variables 1.."
                        + to_string(f.variables));
                if (! seen.insert(v).second)
                    throw FormulaError("clause " + to_string(j + 1) + " mentions variable " + to_string(v) + " twice");
                (lit > 0 ? positive : negative)[v] = true;
            }
        }
        for (unsigned v = 1; v <= f.variables; ++v) {
            if (! positive[v])
                throw FormulaError("variable " + to_string(v) + " never occurs positively");
            if (! negative[v])
                throw FormulaError("variable " + to_string(v) + " never occurs negatively");
        }
    }

    auto parse_dimacs(std::istream & in) -> CnfFormula
    {
        CnfFormula f;
        bool header = false;
        unsigned declared = 0, line_number = 0;
        vector<int> pending;
        string line;
        while (std::getline(in, line)) {
            ++line_number;
            std::istringstream words(line);
            string first;
            if (! (words >> first) || first == "c" || first[0] == 'c' || first == "%")
                continue;
            if (first == "p") {
                string format;
                long long n = -1, m = -1;
                if (header || ! (words >> format >> n >> m) || format != "cnf" || n < 0 || m < 0)
                    throw FormulaError("line " + to_string(line_number) + ": bad problem line");
                f.variables = n;
                declared = m;
                header = true;
                continue;
            }
            if (! header)
                throw FormulaError("line " + to_string(line_number) + ": clause before the problem line");
            std::istringstream literals(line);
            string token;
            while (literals >> token) {
                int lit;
                try {
                    std::size_t used;
                    lit = std::stoi(token, &used);
                    if (used != token.size())
                        throw std::invalid_argument(token);
                }
                catch (const std::exception &) {
                    throw FormulaError("line " + to_string(line_number) + ": '" + token + "' is not a literal");
                }
                if (lit != 0) {
                    pending.push_back(lit);
                    continue;
                }
                if (pending.size() != 3)
                    throw FormulaError("line " + to_string(line_number) + ": clause has " + to_string(pending.size())
                        + " literals, expected 3");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            }
        }
        if (! header)
            throw FormulaError("missing problem line");
        if (! pending.empty())
            throw FormulaError("last clause is not terminated by 0");
        if (f.clauses.size() != declared)
            throw FormulaError("problem line declares " + to_string(declared) + " clauses, found " + to_string(f.clauses.size()));
        return f;
    }

    auto to_dimacs(const CnfFormula & f) -> string
    {
        std::ostringstream out;
        out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
        for (auto & c : f.clauses)
            out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
        return out.str();
    }

    auto satisfies(const CnfFormula & f, std::uint32_t assignment) -> bool
    {
        for (auto & c : f.clauses) {
            bool sat = false;
            for (auto lit : c)
                sat = sat || (((assignment >> (variable_of(lit) - 1)) & 1) == (lit > 0));
            if (! sat)
                return false;
        }
        return true;
    }

    auto satisfying_assignment(const CnfFormula & f, unsigned cap) -> std::optional<std::uint32_t>
    {
        if (f.variables > cap || f.variables > 31)
            throw FormulaError("brute force is capped at " + to_string(std::min(cap, 31u)) + " variables, formula has "
                + to_string(f.variables));
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.variables); ++a)
            if (satisfies(f, a))
                return a;
        return std::nullopt;
    }

    auto sat_bruteforce(const CnfFormula & f, unsigned cap) -> bool
    {
        return satisfying_assignment(f, cap).has_value();
    }

    auto to_string(Role r) -> string
    {
        switch (r) {
            case Role::original: return "original";
            case Role::literal_vertex: return "literal-vertex";
            case Role::clause_literal: return "clause-literal";
            case Role::variable_path: return "variable-path";
            case Role::clause_gadget: return "clause-gadget";
            case Role::triangle_added: return "triangle-added";
            case Role::interconnect: return "interconnect";
            case Role::isolated: return "isolated";
            case Role::anchor: return "anchor";
            case Role::copy: return "copy";
        }
        return "?";
    }

    auto vc_from_3sat(const CnfFormula & f) -> ReductionInstance
    {
        validate(f);
        unsigned n = f.variables, m = f.clauses.size();
        auto literal_vertex = [](int lit) { return 2 * (variable_of(lit) - 1) + (lit < 0 ? 1 : 0); };

        vector<Edge> edges;
        vector<Role> roles(2 * n + 3 * m, Role::literal_vertex);
        for (unsigned v = 0; v < n; ++v)
            edges.emplace_back(2 * v, 2 * v + 1);
        for (unsigned j = 0; j < m; ++j) {
            unsigned base = 2 * n + 3 * j;
            for (unsigned p = 0; p < 3; ++p) {
                roles[base + p] = Role::clause_literal;
                edges.emplace_back(base + p, base + (p + 1) % 3);
                edges.emplace_back(base + p, literal_vertex(f.clauses[j][p]));
            }
        }
        return ReductionInstance{Graph::from_edge_list(2 * n + 3 * m, edges), n + 2 * m, std::move(roles), {"3sat", "vertex-cover"}};
    }

    auto triangle_construction(const Graph & g) -> TriangleConstruction
    {
        auto original = g.edges();
        unsigned n = g.order();
        vector<Edge> edges = original;
        for (unsigned e = 0; e < original.size(); ++e) {
            edges.emplace_back(original[e].first, n + e);
            edges.emplace_back(original[e].second, n + e);
        }
        vector<Role> roles(n, Role::original);
        roles.resize(n + original.size(), Role::triangle_added);
        return TriangleConstruction{Graph::from_edge_list(n + original.size(), edges), std::move(roles)};
    }

    auto dom_from_vc(const ReductionInstance & vc) -> ReductionInstance
    {
        auto t = triangle_construction(vc.graph);
        auto edges = vc.graph.edges();
        unsigned n = vc.graph.order();
        for (unsigned v = 0; v < n; ++v)
            t.roles[v] = vc.roles[v];
        // Apexes on edges between a variable and a clause are the interconnection vertices.
        for (unsigned e = 0; e < edges.size(); ++e)
            if (vc.roles[edges[e].first] != vc.roles[edges[e].second])
                t.roles[n + e] = Role::interconnect;
        return ReductionInstance{std::move(t.graph), vc.budget, std::move(t.roles), with_step(vc.provenance, "triangle")};
    }

    auto locdom_from_3sat(const CnfFormula & f) -> ReductionInstance
    {
        auto r = dom_from_vc(vc_from_3sat(f));
        r.provenance.back() = "triangle (1-locating-dominating)";
        return r;
    }

    auto adjdim_from_locdom(const Graph & g, unsigned k) -> ReductionInstance
    {
        ReductionInstance r{disjoint_union(g, path(1)), k, vector<Role>(g.order(), Role::original), {"1-locating-dominating"}};
        r.roles.push_back(Role::isolated);
        r.provenance.push_back("isolated-vertex");
        return r;
    }

    auto adjdim_from_locdom(const ReductionInstance & locdom) -> ReductionInstance
    {
        auto r = adjdim_from_locdom(locdom.graph, locdom.budget);
        std::copy(locdom.roles.begin(), locdom.roles.end(), r.roles.begin());
        r.provenance = with_step(locdom.provenance, "isolated-vertex");
        return r;
    }

    namespace
    {
        auto corona_roles(const CoronaProduct & c) -> vector<Role>
        {
            vector<Role> roles;
            for (auto & role : c.roles)
                roles.push_back(role.anchor ? Role::anchor : Role::copy);
            return roles;
        }
    }

    auto dim_from_adjdim(const Graph & h, unsigned k) -> ReductionInstance
    {
        if (h.order() < 2)
            throw std::invalid_argument("the corona reduction needs a graph with at least 2 vertices");
        auto c = corona(complete(2), h);
        auto roles = corona_roles(c);
        return ReductionInstance{std::move(c.graph), 2 * k, std::move(roles), {"adjacency-dimension", "corona K_2"}};
    }

    auto dim_from_adjdim(const ReductionInstance & adjdim) -> ReductionInstance
    {
        auto r = dim_from_adjdim(adjdim.graph, adjdim.budget);
        r.provenance = with_step(adjdim.provenance, "corona K_2");
        return r;
    }

    auto locadjdim_from_dom(const Graph & g, unsigned k) -> ReductionInstance
    {
        if (g.order() < 2 || ! is_connected(g))
            throw std::invalid_argument("the corona reduction needs a connected graph with at least 2 vertices");
        auto c = corona(g, complete(2));
        auto roles = corona_roles(c);
        return ReductionInstance{std::move(c.graph), g.order() + k, std::move(roles), {"dominating-set", "corona with K_2"}};
    }

    auto locadjdim_from_dom(const ReductionInstance & dom) -> ReductionInstance
    {
        auto r = locadjdim_from_dom(dom.graph, dom.budget);
        r.provenance = with_step(dom.provenance, "corona with K_2");
        return r;
    }

    auto clause_gadget() -> const vector<Edge> &
    {
        // Found by search_clause_gadgets(); certificate checked in the tests.
        static const vector<Edge> gadget{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 7}, {4, 8}, {5, 6},
            {5, 8}, {6, 7}, {6, 8}, {7, 8}};
        return gadget;
    }

    auto locadjdim_from_3sat(const CnfFormula & f) -> ReductionInstance
    {
        validate(f);
        unsigned n = f.variables, m = f.clauses.size();
        unsigned order = 4 * n + gadget_order * m;
        vector<Edge> edges;
        vector<Role> roles(order, Role::clause_gadget);
        for (unsigned v = 0; v < n; ++v) {
            for (unsigned i = 0; i < 4; ++i)
                roles[4 * v + i] = i == 0 || i == 3 ? Role::variable_path : Role::literal_vertex;
            for (unsigned i = 0; i < 3; ++i)
                edges.emplace_back(4 * v + i, 4 * v + i + 1);
        }
        for (unsigned j = 0; j < m; ++j) {
            unsigned base = 4 * n + gadget_order * j;
            for (auto [u, v] : clause_gadget())
                edges.emplace_back(base + u, base + v);
            auto literals = f.clauses[j];
            std::sort(literals.begin(), literals.end(), [](int a, int b) { return variable_of(a) < variable_of(b); });
            for (unsigned i = 0; i < 3; ++i) {
                auto v = variable_of(literals[i]) - 1;
                edges.emplace_back(4 * v + (literals[i] > 0 ? 1 : 2), base + i);
            }
        }
        return ReductionInstance{Graph::from_edge_list(order, edges), n + 2 * m, std::move(roles), {"3sat", "clause-gadget"}};
    }

    auto certify_clause_gadget(const vector<Edge> & gadget) -> GadgetCertificate
    {
        auto g = with_stubs(gadget);
        unsigned order = g.order();
        GadgetCertificate cert;

        cert.inner_pair_needed = true;
        for (unsigned extra = outer_count; extra <= gadget_order; ++extra) {
            VertexSet s(order, {0, 1, 2, 9, 10, 11});
            if (extra < gadget_order)
                s.set(extra);
            if (separates_gadget_edges(g, gadget, s))
                cert.inner_pair_needed = false;
        }

        cert.every_pattern_completes = true;
        for (unsigned pattern = 1; pattern < 8; ++pattern) {
            bool found = false;
            for (unsigned a = outer_count; a < gadget_order && ! found; ++a)
                for (unsigned b = a + 1; b < gadget_order && ! found; ++b) {
                    VertexSet s(order, {a, b});
                    for (unsigned i = 0; i < outer_count; ++i)
                        if ((pattern >> i) & 1)
                            s.set(gadget_order + i);
                    if (separates_gadget_edges(g, gadget, s)) {
                        cert.completions.push_back({pattern, {a, b}});
                        found = true;
                    }
                }
            cert.every_pattern_completes = cert.every_pattern_completes && found;
        }

        cert.no_pair_without_stub = true;
        for (unsigned a = 0; a < gadget_order; ++a)
            for (unsigned b = a + 1; b < gadget_order; ++b)
                if (separates_gadget_edges(g, gadget, VertexSet(order, {a, b})))
                    cert.no_pair_without_stub = false;

        cert.bases_use_two_gadget_vertices = true;
        for (auto & basis : enumerate_min_bases(g, DimensionVariant::local_adjacency()))
            if (std::count_if(basis.begin(), basis.end(), [](unsigned v) { return v < gadget_order; }) < 2)
                cert.bases_use_two_gadget_vertices = false;
        return cert;
    }

    auto search_clause_gadgets(unsigned edge_count, std::size_t limit) -> vector<vector<Edge>>
    {
        vector<vector<Edge>> orbits;
        std::set<Edge> seen;
        for (unsigned u = 0; u < gadget_order; ++u)
            for (unsigned v = u + 1; v < gadget_order; ++v) {
                if (seen.contains({u, v}))
                    continue;
                vector<Edge> orbit;
                Edge e{u, v};
                for (unsigned r = 0; r < 3; ++r) {
                    Edge sorted{std::min(e.first, e.second), std::max(e.first, e.second)};
                    if (std::find(orbit.begin(), orbit.end(), sorted) == orbit.end())
                        orbit.push_back(sorted);
                    seen.insert(sorted);
                    e = {rotate(e.first), rotate(e.second)};
                }
                orbits.push_back(orbit);
            }

        vector<vector<Edge>> found;
        unsigned count = orbits.size();
        for (unsigned r = 1; r <= count; ++r) {
            vector<unsigned> pick(r);
            std::iota(pick.begin(), pick.end(), 0u);
            while (true) {
                vector<Edge> edges;
                for (auto i : pick)
                    edges.insert(edges.end(), orbits[i].begin(), orbits[i].end());
                if (edges.size() == edge_count) {
                    std::sort(edges.begin(), edges.end());
                    if (is_connected(Graph::from_edge_list(gadget_order, edges)) && certify_clause_gadget(edges).holds()) {
                        found.push_back(edges);
                        if (limit != 0 && found.size() == limit)
                            return found;
                    }
                }
                int i = static_cast<int>(r) - 1;
                while (i >= 0 && pick[i] == count - r + i)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (unsigned j = i + 1; j < r; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
        return found;
    }
}
