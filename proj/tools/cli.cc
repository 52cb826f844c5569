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

#include "cli.hh"

#include <graphdim/construct.hh>
#include <graphdim/cover.hh>
#include <graphdim/dimension.hh>
#include <graphdim/io.hh>
#include <graphdim/parameters.hh>
#include <graphdim/reductions.hh>
#include <graphdim/theorems.hh>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

using std::string;
using std::vector;

namespace graphdim::cli
{
    namespace
    {
        struct Options
        {
            std::uint64_t budget = 200'000'000;
            unsigned threads = std::max(1u, std::thread::hardware_concurrency());
            bool json = false;
            string dot;

            auto limits() const -> SearchLimits { return {budget, threads}; }
        };

        auto write_file(const string & path, const string & content) -> void
        {
            std::ofstream file(path, std::ios::binary);
            if (! file || ! (file << content))
                throw std::invalid_argument("cannot write '" + path + "'");
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream file(path, std::ios::binary);
            if (! file)
                throw std::invalid_argument("cannot open '" + path + "'");
            std::ostringstream text;
            text << file.rdbuf();
            return text.str();
        }

        /// DIMACS starts with `c` comments and a `p` line; edge lists never do.
        auto looks_like_dimacs(const string & text) -> bool
        {
            std::istringstream lines(text);
            string line;
            while (std::getline(lines, line)) {
                auto first = line.find_first_not_of(" \t\r");
                if (first == string::npos || line[first] == 'c' || line[first] == '#')
                    continue;
                return line[first] == 'p';
            }
            return false;
        }

        auto dump(std::ostream & out, const nlohmann::ordered_json & j) -> void
        {
            out << j.dump(2) << '\n';
        }

        auto list(const vector<unsigned> & v) -> string
        {
            string s = "{";
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
            return s + "}";
        }

        auto compute(const Options & options, const string & variant_name, const string & input, std::ostream & out) -> int
        {
            auto variant = DimensionVariant::parse(variant_name);
            auto g = read_edge_list_file(input);
            auto certificate = dimension(g, variant, options.limits());
            dump(out, to_json(certificate, g));
            if (! options.dot.empty())
                write_file(options.dot, to_dot(g, certificate.witness));
            return ok;
        }

        auto parameter(const Options & options, const string & name, const string & input, std::ostream & out) -> int
        {
            auto g = read_edge_list_file(input);
            if (name == "gamma-prime") {
                auto result = gamma_prime(g, options.limits());
                dump(out, {{"parameter", "gamma-prime"}, {"value", result.value}, {"deleted_vertex", result.deleted_vertex},
                              {"witness", result.witness}, {"exhaustive", true}, {"graph_hash", graph_hash(g)}});
                return ok;
            }

            std::map<string, std::function<ParameterCertificate(const Graph &, SearchLimits)>> solvers{
                {"gamma", domination_number}, {"beta", vertex_cover_number}, {"alpha", independence_number},
                {"locating-dominating", min_locating_dominating}};
            auto solver = solvers.find(name);
            if (solver == solvers.end())
                throw std::invalid_argument(
                    "unknown parameter '" + name + "' (expected gamma, gamma-prime, beta, alpha or locating-dominating)");
            auto certificate = solver->second(g, options.limits());
            dump(out, to_json(certificate, g));
            if (! options.dot.empty())
                write_file(options.dot, to_dot(g, certificate.witness));
            return ok;
        }

        auto generate(const Options & options, const string & spec, const string & output, std::ostream & out) -> int
        {
            auto g = parse_graph_spec(spec);
            auto text = write_edge_list(g);
            if (output.empty())
                out << text;
            else
                write_file(output, text);
            if (! options.dot.empty())
                write_file(options.dot, to_dot(g));
            return ok;
        }

        auto verify(const Options & options, const string & theorem, const vector<string> & specs, std::ostream & out) -> int
        {
            std::map<string, std::size_t> arity{
                {"corona-dim", 2}, {"corona-adim", 2}, {"corona-local", 2}, {"twin", 1}, {"strong-twin", 2}};
            auto expected = arity.find(theorem);
            if (expected == arity.end())
                throw std::invalid_argument(
                    "unknown theorem '" + theorem + "' (expected corona-dim, corona-adim, corona-local, twin or strong-twin)");
            if (specs.size() != expected->second)
                throw std::invalid_argument(theorem + " takes " + std::to_string(expected->second) + " graph spec(s), got " +
                                            std::to_string(specs.size()));

            auto g = parse_graph_spec(specs[0]);
            auto h = specs.size() > 1 ? parse_graph_spec(specs[1]) : Graph{};
            auto limits = options.limits();

            TheoremReport report;
            if (theorem == "corona-dim")
                report = verify_corona_dim(g, h, limits);
            else if (theorem == "corona-adim")
                report = verify_corona_adjacency(g, h, limits);
            else if (theorem == "corona-local")
                report = verify_corona_local(g, h, limits);
            else if (theorem == "twin")
                report = verify_twin_theorem(g, limits);
            else
                report = verify_strong_twin_lemma(g, h, limits);

            if (options.json)
                dump(out, to_json(report));
            else {
                out << "theorem: " << report.theorem << '\n';
                if (! report.case_label.empty())
                    out << "case: " << report.case_label << '\n';
                for (auto & c : report.clauses)
                    out << (c.holds ? "ok   " : "FAIL ") << c.clause << ": expected "
                        << (c.relation == ClauseCheck::Relation::at_least ? ">= " : "") << c.expected << ", actual "
                        << c.actual << '\n';
                for (auto & [name, c] : report.certificates)
                    out << "certificate " << name << ": " << c.variant.name() << " = " << c.value << " witness "
                        << list(c.witness) << '\n';
                for (auto & [name, w] : report.witnesses)
                    out << "witness " << name << ": " << list(w) << '\n';
                out << "holds: " << (report.holds() ? "true" : "false") << '\n';
            }
            return report.holds() ? ok : mismatch;
        }

        /// Whether the target problem of a chain has a solution within its budget.
        auto decide(const string & chain, const ReductionInstance & instance, SearchLimits limits) -> bool
        {
            auto within = [&](CoverProblem problem) { return CoverSearch(std::move(problem), limits).find(instance.budget).has_value(); };
            if (chain == "vc")
                return within(vertex_cover_problem(instance.graph));
            if (chain == "dom")
                return within(domination_problem(instance.graph));
            if (chain == "locdom")
                return within(locating_dominating_problem(instance.graph));
            if (chain == "adjdim")
                return has_generator_of_size(instance.graph, DimensionVariant::adjacency(), instance.budget, limits);
            if (chain == "dim-corona")
                return has_generator_of_size(instance.graph, DimensionVariant::metric(), instance.budget, limits);
            return has_generator_of_size(instance.graph, DimensionVariant::local_adjacency(), instance.budget, limits);
        }

        auto reduce_formula(const string & chain, const CnfFormula & f) -> ReductionInstance
        {
            if (chain == "vc")
                return vc_from_3sat(f);
            if (chain == "locdom")
                return locdom_from_3sat(f);
            if (chain == "adjdim")
                return adjdim_from_locdom(locdom_from_3sat(f));
            if (chain == "dim-corona")
                return dim_from_adjdim(adjdim_from_locdom(locdom_from_3sat(f)));
            if (chain == "ladim-gadget")
                return locadjdim_from_3sat(f);
            return locadjdim_from_dom(dom_from_vc(vc_from_3sat(f)));
        }

        /// Graph inputs run only the last link of a chain; the source problem is decided directly as the oracle.
        auto reduce_graph(const string & chain, const Graph & g, unsigned k, SearchLimits limits, bool check)
            -> std::pair<ReductionInstance, std::optional<bool>>
        {
            std::optional<bool> source;
            ReductionInstance instance;
            if (chain == "adjdim") {
                instance = adjdim_from_locdom(g, k);
                if (check)
                    source = CoverSearch(locating_dominating_problem(g), limits).find(k).has_value();
            }
            else if (chain == "dim-corona") {
                instance = dim_from_adjdim(g, k);
                if (check)
                    source = has_generator_of_size(g, DimensionVariant::adjacency(), k, limits);
            }
            else if (chain == "ladim-corona") {
                instance = locadjdim_from_dom(g, k);
                if (check)
                    source = CoverSearch(domination_problem(g), limits).find(k).has_value();
            }
            else
                throw std::invalid_argument(chain + " reduces from 3-SAT and needs a DIMACS input");
            return {std::move(instance), source};
        }

        auto reduce(const Options & options, const string & chain, const string & input, const string & output,
            std::optional<unsigned> k, bool check, std::ostream & out) -> int
        {
            static const vector<string> chains{"vc", "locdom", "adjdim", "ladim-gadget", "dim-corona", "ladim-corona"};
            if (std::find(chains.begin(), chains.end(), chain) == chains.end())
                throw std::invalid_argument(
                    "unknown chain '" + chain + "' (expected vc, locdom, adjdim, ladim-gadget, dim-corona or ladim-corona)");

            auto text = read_file(input);
            ReductionInstance instance;
            std::optional<bool> source;
            if (looks_like_dimacs(text)) {
                if (k)
                    throw std::invalid_argument("--k applies to graph inputs only");
                std::istringstream in(text);
                auto f = parse_dimacs(in);
                validate(f);
                instance = reduce_formula(chain, f);
                if (check)
                    source = sat_bruteforce(f);
            }
            else {
                if (! k)
                    throw std::invalid_argument("graph inputs need the source budget --k");
                std::istringstream in(text);
                auto [reduced, answer] = reduce_graph(chain, read_edge_list(in), *k, options.limits(), check);
                instance = std::move(reduced);
                source = answer;
            }

            auto sidecar = to_json(instance);
            if (! output.empty()) {
                write_file(output, write_edge_list(instance.graph));
                write_file(output + ".json", sidecar.dump(2) + "\n");
            }
            if (! options.dot.empty())
                write_file(options.dot, to_dot(instance.graph));

            std::optional<bool> target;
            if (check)
                target = decide(chain, instance, options.limits());

            if (options.json) {
                if (check) {
                    sidecar["source_answer"] = *source;
                    sidecar["target_answer"] = *target;
                    sidecar["equivalent"] = *source == *target;
                }
                dump(out, sidecar);
            }
            else {
                out << "chain: " << chain << '\n'
                    << "order: " << instance.graph.order() << '\n'
                    << "size: " << instance.graph.size() << '\n'
                    << "budget: " << instance.budget << '\n';
                if (check)
                    out << "source: " << (*source ? "yes" : "no") << '\n'
                        << "target: " << (*target ? "yes" : "no") << '\n'
                        << "equivalent: " << (*source == *target ? "true" : "false") << '\n';
            }
            return ! check || *source == *target ? ok : mismatch;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Exact metric, adjacency and local dimensions; corona and twin identities; hardness reductions.", "graphdim"};
        app.require_subcommand(1);

        Options options;
        auto add_common = [&](CLI::App * command) {
            command->add_option("--budget", options.budget, "Search node budget per solver call (0 = unlimited)")
                ->capture_default_str();
            command->add_option("--threads", options.threads, "Solver threads; results do not depend on it")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
            command->add_flag("--json", options.json, "Machine-readable output");
            command->add_option("--dot", options.dot, "Also write the graph as DOT to this path");
        };

        string variant, input, name, spec, output, theorem, chain;
        vector<string> specs;
        std::optional<unsigned> k;
        bool check = false;

        auto * compute_cmd = app.add_subcommand("compute", "Dimension certificate of an edge-list graph");
        compute_cmd->add_option("--variant", variant, "dim, adim, ldim, ladim or trunc:<k>")->required();
        compute_cmd->add_option("--input", input, "Edge-list file")->required();
        add_common(compute_cmd);

        auto * param_cmd = app.add_subcommand("param", "Domination, vertex cover, independence or locating-domination");
        param_cmd->add_option("--name", name, "gamma, gamma-prime, beta, alpha or locating-dominating")->required();
        param_cmd->add_option("--input", input, "Edge-list file")->required();
        add_common(param_cmd);

        auto * generate_cmd = app.add_subcommand("generate", "Edge list for a family or product spec");
        generate_cmd->add_option("spec", spec, "e.g. path:7, corona(path:4,path:5), strong(complete:3,path:3)")->required();
        generate_cmd->add_option("--output", output, "Output path; stdout when omitted");
        add_common(generate_cmd);

        auto * verify_cmd = app.add_subcommand("verify", "Check a corona or twin identity on concrete graphs");
        verify_cmd->add_option("theorem", theorem, "corona-dim, corona-adim, corona-local, twin or strong-twin")->required();
        verify_cmd->add_option("graphs", specs, "Graph specs: G, or G and H")->required();
        add_common(verify_cmd);

        auto * reduce_cmd = app.add_subcommand("reduce", "Build a reduction instance from a DIMACS formula or a graph");
        reduce_cmd->add_option("chain", chain, "vc, locdom, adjdim, ladim-gadget, dim-corona or ladim-corona")->required();
        reduce_cmd->add_option("input", input, "DIMACS 3-CNF file, or edge list with --k")->required();
        reduce_cmd->add_option("--output", output, "Write the instance edge list here and the sidecar to <output>.json");
        reduce_cmd->add_option("--k", k, "Source budget for graph inputs");
        reduce_cmd->add_flag("--check", check, "Solve source and target exactly and compare the answers");
        add_common(reduce_cmd);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? ok : input_error;
        }

        try {
            if (compute_cmd->parsed())
                return compute(options, variant, input, out);
            if (param_cmd->parsed())
                return parameter(options, name, input, out);
            if (generate_cmd->parsed())
                return generate(options, spec, output, out);
            if (verify_cmd->parsed())
                return verify(options, theorem, specs, out);
            return reduce(options, chain, input, output, k, check, out);
        }
        catch (const BudgetExceeded & e) {
            err << "error: " << e.what() << '\n';
            return budget_exceeded;
        }
        catch (const CaseConflict & e) {
            err << "mismatch: " << e.what() << '\n';
            return mismatch;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << '\n';
            return input_error;
        }
    }
}
