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
#include <graphdim/io.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace graphdim
{
    namespace
    {
        auto strip_comment(string line) -> string
        {
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            return line;
        }

        auto is_blank(const string & line) -> bool
        {
            return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
        }

        auto read_pair(const string & line, unsigned line_number, const char * what) -> std::pair<unsigned, unsigned>
        {
            std::istringstream fields(line);
            long long a, b;
            string rest;
            if (! (fields >> a >> b) || (fields >> rest))
                throw ParseError("line " + std::to_string(line_number) + ": expected " + what);
            if (a < 0 || b < 0 || a > 0xffffff || b > 0xffffff)
                throw ParseError("line " + std::to_string(line_number) + ": value out of range");
            return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
        }

        class SpecParser
        {
        private:
            string _text;
            std::size_t _pos = 0;

            [[noreturn]] auto fail(const string & what) const -> void
            {
                throw ParseError("graph spec column " + std::to_string(_pos + 1) + ": " + what);
            }

            auto peek() const -> char { return _pos < _text.size() ? _text[_pos] : '\0'; }

            auto expect(char c) -> void
            {
                if (peek() != c)
                    fail(string("expected '") + c + "'");
                ++_pos;
            }

            auto identifier() -> string
            {
                auto start = _pos;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                    ++_pos;
                if (start == _pos)
                    fail("expected a family or operation name");
                return _text.substr(start, _pos - start);
            }

            auto number() -> unsigned
            {
                unsigned value = 0;
                auto begin = _text.data() + _pos, end = _text.data() + _text.size();
                auto [stop, ec] = std::from_chars(begin, end, value);
                if (ec != std::errc{} || stop == begin)
                    fail("expected a non-negative integer");
                _pos += stop - begin;
                return value;
            }

            auto arguments() -> vector<Graph>
            {
                expect('(');
                vector<Graph> args{graph()};
                while (peek() == ',') {
                    ++_pos;
                    args.push_back(graph());
                }
                expect(')');
                return args;
            }

            auto operation(const string & name, vector<Graph> args) -> Graph
            {
                auto arity = [&](std::size_t low, std::size_t high) {
                    if (args.size() < low || args.size() > high)
                        fail(name + " takes " + (low == high ? std::to_string(low) : std::to_string(low) + " or more") +
                             " argument(s), got " + std::to_string(args.size()));
                };
                if (name == "corona") {
                    arity(2, 2);
                    return corona(args[0], args[1]).graph;
                }
                if (name == "complement") {
                    arity(1, 1);
                    return complement(args[0]);
                }
                arity(2, args.size());
                if (name == "strong")
                    return strong_power(args);
                auto result = args[0];
                for (std::size_t i = 1; i < args.size(); ++i)
                    result = name == "union" ? disjoint_union(result, args[i]) : join(result, args[i]);
                return result;
            }

            auto graph() -> Graph
            {
                auto start = _pos;
                auto name = identifier();
                if (name == "corona" || name == "strong" || name == "union" || name == "join" || name == "complement")
                    return operation(name, arguments());

                auto kind = parse_family(name);
                if (! kind) {
                    _pos = start;
                    fail("unknown family '" + name + "'");
                }
                vector<unsigned> params;
                while (peek() == ':') {
                    ++_pos;
                    params.push_back(number());
                }
                try {
                    return family(*kind, params);
                }
                catch (const GraphError & e) {
                    _pos = start;
                    fail(e.what());
                }
            }

        public:
            explicit SpecParser(const string & text)
            {
                for (char c : text)
                    if (! std::isspace(static_cast<unsigned char>(c)))
                        _text.push_back(c);
            }

            auto parse() -> Graph
            {
                auto g = graph();
                if (_pos != _text.size())
                    fail("unexpected trailing input");
                return g;
            }
        };

        auto to_json_array(const vector<unsigned> & v) -> nlohmann::ordered_json
        {
            return nlohmann::ordered_json(v);
        }
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        string line;
        unsigned line_number = 0;
        std::optional<std::pair<unsigned, unsigned>> header;
        vector<Edge> edges;
        while (std::getline(in, line)) {
            ++line_number;
            line = strip_comment(line);
            if (is_blank(line))
                continue;
            if (! header) {
                header = read_pair(line, line_number, "header 'n m'");
                continue;
            }
            if (edges.size() == header->second)
                throw ParseError("line " + std::to_string(line_number) + ": more edges than the header declares");
            auto [u, v] = read_pair(line, line_number, "edge 'u v'");
            if (u >= header->first || v >= header->first)
                throw ParseError("line " + std::to_string(line_number) + ": vertex out of range for order " +
                                 std::to_string(header->first));
            if (u == v)
                throw ParseError("line " + std::to_string(line_number) + ": self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
        }
        if (! header)
            throw ParseError("missing header 'n m'");
        if (edges.size() != header->second)
            throw ParseError("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
        return Graph::from_edge_list(header->first, edges);
    }

    auto read_edge_list_file(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path + "'");
        try {
            return read_edge_list(in);
        }
        catch (const ParseError & e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    auto write_edge_list(const Graph & g) -> string
    {
        string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    auto parse_graph_spec(const string & text) -> Graph
    {
        return SpecParser(text).parse();
    }

    auto graph_hash(const Graph & g) -> string
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : write_edge_list(g)) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        char buffer[17];
        std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
        return buffer;
    }

    auto to_json(const BasisCertificate & c, const Graph & g) -> nlohmann::ordered_json
    {
        return {{"variant", c.variant.name()}, {"value", c.value}, {"witness", to_json_array(c.witness)},
            {"exhaustive", c.exhaustive}, {"graph_hash", graph_hash(g)}};
    }

    auto to_json(const ParameterCertificate & c, const Graph & g) -> nlohmann::ordered_json
    {
        return {{"parameter", c.parameter}, {"value", c.value}, {"witness", to_json_array(c.witness)},
            {"exhaustive", c.exhaustive}, {"graph_hash", graph_hash(g)}};
    }

    auto to_json(const TheoremReport & r) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
        for (auto & c : r.clauses)
            clauses.push_back({{"clause", c.clause},
                {"relation", c.relation == ClauseCheck::Relation::equal ? "equal" : "at_least"}, {"expected", c.expected},
                {"actual", c.actual}, {"holds", c.holds}});

        nlohmann::ordered_json certificates = nlohmann::ordered_json::object();
        for (auto & [name, c] : r.certificates)
            certificates[name] = {{"variant", c.variant.name()}, {"value", c.value}, {"witness", to_json_array(c.witness)},
                {"exhaustive", c.exhaustive}};

        nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
        for (auto & [name, w] : r.witnesses)
            witnesses[name] = to_json_array(w);

        nlohmann::ordered_json out{{"theorem", r.theorem}, {"holds", r.holds()}};
        if (! r.case_label.empty())
            out["case"] = r.case_label;
        out["clauses"] = std::move(clauses);
        out["certificates"] = std::move(certificates);
        out["witnesses"] = std::move(witnesses);
        return out;
    }

    auto to_json(const ReductionInstance & r) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json roles = nlohmann::ordered_json::array();
        for (auto role : r.roles)
            roles.push_back(to_string(role));
        return {{"budget", r.budget}, {"order", r.graph.order()}, {"size", r.graph.size()}, {"roles", std::move(roles)},
            {"provenance", r.provenance}, {"graph_hash", graph_hash(r.graph)}};
    }

    auto to_dot(const Graph & g, const vector<unsigned> & highlight) -> string
    {
        string out = "graph G {\n";
        for (unsigned v = 0; v < g.order(); ++v) {
            out += "  " + std::to_string(v);
            if (std::find(highlight.begin(), highlight.end(), v) != highlight.end())
                out += " [style=filled, fillcolor=black, fontcolor=white]";
            out += ";\n";
        }
        for (auto [u, v] : g.edges())
            out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        out += "}\n";
        return out;
    }
}
