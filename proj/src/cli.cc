/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/cli.hh>
#include <minrank/blowup.hh>
#include <minrank/io.hh>
#include <minrank/matrix.hh>
#include <minrank/miner.hh>
#include <minrank/oracle.hh>
#include <minrank/patterns.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace minrank
{
    namespace
    {
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Config
        {
            string q;
            size_t k = 0;
            optional<size_t> max_k;
            size_t vertex_budget = default_vertex_budget;
            std::uint64_t budget = 0;
            unsigned jobs = 1;
            string format = "json";
            string input, output, resume, checkpoint;
            size_t max_n = 5;
            bool stream = false;
        };

        auto parse_q(const string & q) -> FieldPtr
        {
            try {
                return std::make_shared<const Field>(Field::from_string(q));
            }
            catch (const FieldError & e) {
                throw UsageError{ "--q: " + string(e.what()) };
            }
        }

        // fn(i) for i in [0, n), spread over jobs threads; fn must not throw
        auto parallel_for(size_t n, unsigned jobs, const std::function<void (size_t)> & fn) -> void
        {
            jobs = std::max(1u, std::min<unsigned>(jobs, n ? n : 1));
            if (1 == jobs) {
                for (size_t i = 0 ; i < n ; ++i)
                    fn(i);
                return;
            }
            vector<std::thread> workers;
            for (unsigned w = 0 ; w < jobs ; ++w)
                workers.emplace_back([&, w] {
                    for (size_t i = w ; i < n ; i += jobs)
                        fn(i);
                });
            for (auto & t : workers)
                t.join();
        }

        struct Line
        {
            Json result;
            optional<string> error;
        };

        // reads graph6 lines, runs fn on each, prints results in input order
        auto per_graph(std::istream & in, std::ostream & out, std::ostream & err, unsigned jobs,
                const std::function<Json (const SimpleGraph &)> & fn) -> int
        {
            auto lines = read_graph6_lines(in);
            if (! lines.empty() && lines.front() == ">>graph6<<")
                lines.erase(lines.begin());

            vector<Line> results(lines.size());
            parallel_for(lines.size(), jobs, [&] (size_t i) {
                try {
                    auto g = parse_graph6(lines[i]);
                    results[i].result = fn(g);
                    results[i].result["graph6"] = lines[i];
                }
                catch (const std::exception & e) {
                    results[i].error = e.what();
                }
            });

            int rc = exit_code::success;
            for (size_t i = 0 ; i < lines.size() ; ++i) {
                if (results[i].error) {
                    err << "line " << (i + 1) << " (" << lines[i] << "): " << *results[i].error << '\n';
                    rc = exit_code::domain_error;
                }
                else
                    out << results[i].result.dump() << '\n';
            }
            return rc;
        }

        auto cmd_patterns(const Config & c, std::ostream & out) -> int
        {
            auto field = parse_q(c.q);
            if (c.format != "json" && c.format != "dot" && c.format != "g6" && c.format != "matrix")
                throw UsageError{ "--format must be json, dot, g6 or matrix" };

            auto ps = generate(field, c.k, c.vertex_budget);
            for (size_t i = 0 ; i < ps.patterns.size() ; ++i) {
                auto & p = ps.patterns[i];
                if (c.format == "json")
                    out << Json{ { "q", field->order() }, { "k", c.k }, { "pattern", i },
                        { "form", to_json(p.form) }, { "points", to_json(ps.points) }, { "graph", to_json(p.graph) } }.dump() << '\n';
                else if (c.format == "dot")
                    out << to_dot(p.graph, "pattern_" + std::to_string(i));
                else if (c.format == "g6")
                    out << emit_graph6(p.graph.simple_version()) << '\n';
                else {
                    if (i != 0)
                        out << '\n';
                    auto m = pattern_matrix(ps, i);
                    for (size_t r = 0 ; r < m.rows() ; ++r) {
                        for (size_t s = 0 ; s < m.cols() ; ++s)
                            out << (s ? " " : "") << m(r, s).rep;
                        out << '\n';
                    }
                }
            }
            return exit_code::success;
        }

        auto witness_json(const BlowupWitness & w) -> Json
        {
            Json a = Json::array();
            for (auto & x : w.assignment)
                a.push_back(x ? Json(*x) : Json(nullptr));
            return a;
        }

        auto cmd_minrank(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
        {
            MinRankSolver solver(parse_q(c.q), c.vertex_budget);
            return per_graph(in, out, err, c.jobs, [&] (const SimpleGraph & g) {
                auto r = solver.min_rank(g, c.max_k);
                if (r.value)
                    return Json{ { "minrank", *r.value } };
                return Json{ { "minrank_exceeds", r.exceeds } };
            });
        }

        auto cmd_member(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
        {
            MinRankSolver solver(parse_q(c.q), c.vertex_budget);
            return per_graph(in, out, err, c.jobs, [&] (const SimpleGraph & g) {
                auto m = solver.member(g, c.k);
                Json j{ { "member", m.has_value() } };
                if (m) {
                    j["pattern"] = m->pattern;
                    j["witness"] = witness_json(m->witness);
                }
                return j;
            });
        }

        auto cmd_oracle(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
        {
            auto field = parse_q(c.q);
            auto budget = c.budget ? c.budget : default_oracle_budget;
            return per_graph(in, out, err, c.jobs, [&] (const SimpleGraph & g) {
                try {
                    return Json{ { "minrank", oracle_min_rank(g, field, budget) } };
                }
                catch (const OracleBudgetExceeded &) {
                    return Json{ { "error", "budget" } };
                }
            });
        }

        auto cmd_mine(const Config & c, std::istream & in, std::ostream & out, std::ostream & err) -> int
        {
            auto field = parse_q(c.q);
            if (! c.stream && c.max_n > max_internal_order)
                throw UsageError{ "--max-n above " + std::to_string(max_internal_order) + " needs --stream" };

            MinerOptions options;
            options.jobs = c.jobs;
            options.budget = c.budget;
            if (! c.resume.empty()) {
                std::ifstream f(c.resume);
                if (! f)
                    throw std::runtime_error{ "cannot read checkpoint " + c.resume };
                options.resume = MinerCheckpoint::from_json(Json::parse(f));
            }
            if (! c.checkpoint.empty())
                options.checkpoint_path = c.checkpoint;
            else if (! c.resume.empty())
                options.checkpoint_path = c.resume;

            MinerRun run;
            if (c.stream) {
                vector<SimpleGraph> graphs;
                for (auto & line : read_graph6_lines(in))
                    if (line != ">>graph6<<")
                        graphs.push_back(parse_graph6(line));
                run = mine_stream(field, c.k, graphs, options);
            }
            else
                run = mine(field, c.k, c.max_n, options);

            Json forbidden = Json::array();
            for (auto & g : run.found)
                forbidden.push_back(emit_graph6(g));
            out << Json{ { "q", run.q }, { "k", run.k }, { "n_max", run.n_max }, { "forbidden", forbidden },
                { "complete", run.complete },
                { "stats", { { "examined", run.stats.examined }, { "members", run.stats.members },
                    { "non_members", run.stats.non_members }, { "oracle_verified", run.stats.oracle_verified } } },
                { "checkpoint", run.checkpoint.to_json() } }.dump() << '\n';

            if (! run.complete) {
                err << "budget exhausted; resume from the checkpoint" << (options.checkpoint_path ? " in " + *options.checkpoint_path : string{}) << '\n';
                return exit_code::domain_error;
            }
            return exit_code::success;
        }

        auto cmd_classify(const Config & c, std::istream & in, std::ostream & out) -> int
        {
            FieldPtr fallback = c.q.empty() ? nullptr : parse_q(c.q);
            auto j = Json::parse(in);
            auto m = matrix_from_json(j, fallback);
            auto cls = classify_invertible_symmetric(m);
            auto norm = congruence_normalize(m);
            out << Json{ { "order", cls.order }, { "tag", to_string(cls.tag) },
                { "projective_tag", to_string(cls.projective_tag) }, { "representative", cls.representative },
                { "normal_form", to_json(norm.normal_form) }, { "transform", to_json(norm.transform) } }.dump() << '\n';
            return exit_code::success;
        }
    }

    auto run_cli(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Config c;
        CLI::App app{ "Minimum rank of graphs over finite fields, by pattern graphs and blowups", "minrank" };
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--input", c.input, "read from this file instead of stdin");
        app.add_option("--output", c.output, "write results to this file instead of stdout");
        app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 1024u));

        auto add_q = [&] (CLI::App * s, bool required) {
            auto o = s->add_option("--q", c.q, "field order, as 9 or 3^2");
            if (required)
                o->required();
        };
        auto add_budget = [&] (CLI::App * s) {
            s->add_option("--vertex-budget", c.vertex_budget, "largest pattern to build");
        };

        auto patterns = app.add_subcommand("patterns", "print the pattern graphs for GF(q) and k");
        add_q(patterns, true);
        patterns->add_option("--k", c.k, "rank bound")->required();
        patterns->add_option("--format", c.format, "json, dot, g6 or matrix");
        add_budget(patterns);

        auto minrank = app.add_subcommand("minrank", "minimum rank of each graph6 line on the input");
        add_q(minrank, true);
        minrank->add_option("--max-k", c.max_k, "give up above this rank");
        add_budget(minrank);

        auto member = app.add_subcommand("member", "whether each input graph has minimum rank at most k");
        add_q(member, true);
        member->add_option("--k", c.k, "rank bound")->required();
        add_budget(member);

        auto oracle = app.add_subcommand("oracle", "minimum rank by brute force");
        add_q(oracle, true);
        oracle->add_option("--budget", c.budget, "largest number of matrices to try");

        auto mine_cmd = app.add_subcommand("mine", "minimal forbidden induced subgraphs for minimum rank at most k");
        add_q(mine_cmd, true);
        mine_cmd->add_option("--k", c.k, "rank bound")->required();
        mine_cmd->add_option("--max-n", c.max_n, "largest order to enumerate");
        mine_cmd->add_option("--budget", c.budget, "graphs to examine in this run");
        mine_cmd->add_option("--resume", c.resume, "checkpoint file to continue from");
        mine_cmd->add_option("--checkpoint", c.checkpoint, "where to write checkpoints");
        mine_cmd->add_flag("--stream", c.stream, "take graphs from the graph6 input instead of enumerating");

        auto classify = app.add_subcommand("classify", "congruence class of a JSON symmetric matrix");
        add_q(classify, false);

        auto selftest = app.add_subcommand("selftest", "replay the published examples");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::success;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_code::success;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << '\n';
            return exit_code::usage_error;
        }

        std::ifstream in_file;
        std::ofstream out_file;
        std::istream * input = &in;
        std::ostream * output = &out;
        if (! c.input.empty()) {
            in_file.open(c.input);
            if (! in_file) {
                err << "cannot read " << c.input << '\n';
                return exit_code::usage_error;
            }
            input = &in_file;
        }
        if (! c.output.empty()) {
            out_file.open(c.output);
            if (! out_file) {
                err << "cannot write " << c.output << '\n';
                return exit_code::usage_error;
            }
            output = &out_file;
        }

        try {
            if (patterns->parsed())
                return cmd_patterns(c, *output);
            if (minrank->parsed())
                return cmd_minrank(c, *input, *output, err);
            if (member->parsed())
                return cmd_member(c, *input, *output, err);
            if (oracle->parsed())
                return cmd_oracle(c, *input, *output, err);
            if (mine_cmd->parsed())
                return cmd_mine(c, *input, *output, err);
            if (classify->parsed())
                return cmd_classify(c, *input, *output);
            if (selftest->parsed())
                return run_selftest(*output) ? exit_code::success : exit_code::domain_error;
        }
        catch (const UsageError & e) {
            err << e.what() << '\n';
            return exit_code::usage_error;
        }
        catch (const std::exception & e) {
            err << e.what() << '\n';
            return exit_code::domain_error;
        }
        return exit_code::usage_error;
    }
}
