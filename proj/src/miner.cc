/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/miner.hh>
#include <minrank/oracle.hh>

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace minrank
{
    namespace
    {
        using Invariant = std::tuple<size_t, vector<std::pair<size_t, vector<size_t>>>>;

        // edge count plus, per vertex, its degree and sorted neighbour degrees
        auto invariant(const SimpleGraph & g) -> Invariant
        {
            vector<std::pair<size_t, vector<size_t>>> per;
            for (size_t v = 0 ; v < g.size() ; ++v) {
                vector<size_t> nd;
                auto & row = g.neighbours(v);
                for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                    nd.push_back(g.degree(u));
                std::sort(nd.begin(), nd.end());
                per.emplace_back(g.degree(v), std::move(nd));
            }
            std::sort(per.begin(), per.end());
            return { g.edge_count(), std::move(per) };
        }

        auto isomorphic(const SimpleGraph & a, const SimpleGraph & b) -> bool
        {
            switch (are_isomorphic(a, b)) {
                case IsomorphismResult::isomorphic:       return true;
                case IsomorphismResult::not_isomorphic:   return false;
                case IsomorphismResult::budget_exhausted: break;
            }
            throw std::runtime_error{ "isomorphism test ran out of budget" };
        }

        auto extend(const vector<SimpleGraph> & previous, size_t n) -> vector<SimpleGraph>
        {
            vector<SimpleGraph> result;
            std::map<Invariant, vector<size_t>> buckets;
            for (auto & base : previous) {
                for (uint64_t mask = 0 ; mask < (uint64_t{ 1 } << (n - 1)) ; ++mask) {
                    SimpleGraph g(n, base.edges());
                    for (size_t v = 0 ; v + 1 < n ; ++v)
                        if (mask & (uint64_t{ 1 } << v))
                            g.add_edge(v, n - 1);

                    auto & bucket = buckets[invariant(g)];
                    bool seen = std::any_of(bucket.begin(), bucket.end(), [&] (size_t i) { return isomorphic(result[i], g); });
                    if (! seen) {
                        bucket.push_back(result.size());
                        result.push_back(std::move(g));
                    }
                }
            }
            return result;
        }

        // mr <= k, treating a pattern budget failure below k as an error rather than a no
        auto member(const MinRankSolver & solver, const SimpleGraph & g, size_t k) -> bool
        {
            auto r = solver.min_rank(g, k);
            if (r.value)
                return true;
            if (r.exceeds >= k)
                return false;
            throw BudgetExceeded{ "pattern budget exhausted before k = " + std::to_string(k) };
        }

        struct Verdict
        {
            bool member = false, forbidden = false;
        };

        auto judge(const MinRankSolver & solver, const SimpleGraph & g, size_t k) -> Verdict
        {
            Verdict v;
            v.member = member(solver, g, k);
            if (v.member)
                return v;
            v.forbidden = true;
            for (size_t x = 0 ; x < g.size() && v.forbidden ; ++x)
                v.forbidden = member(solver, g.without_vertex(x), k);
            return v;
        }

        struct Engine
        {
            FieldPtr field;
            size_t k;
            MinerOptions options;
            MinRankSolver solver;
            MinerRun run;
            uint64_t since_flush = 0;

            Engine(const FieldPtr & f, size_t k_, size_t n_max, const MinerOptions & o) :
                field(f), k(k_), options(o), solver(f)
            {
                run.q = f->order();
                run.k = k;
                run.n_max = n_max;
                run.checkpoint.q = run.q;
                run.checkpoint.k = k;

                if (options.resume) {
                    auto & r = *options.resume;
                    if (r.q != run.q || r.k != k)
                        throw std::invalid_argument{ "checkpoint is for q = " + std::to_string(r.q) + ", k = "
                            + std::to_string(r.k) + ", not q = " + std::to_string(run.q) + ", k = " + std::to_string(k) };
                    run.checkpoint = r;
                    for (auto & s : r.found)
                        run.found.push_back(parse_graph6(s));
                }
            }

            auto budget_left() const -> uint64_t
            {
                if (0 == options.budget)
                    return UINT64_MAX;
                return options.budget > run.stats.examined ? options.budget - run.stats.examined : 0;
            }

            auto flush() -> void
            {
                since_flush = 0;
                if (! options.checkpoint_path)
                    return;
                std::ofstream out(*options.checkpoint_path);
                if (! out)
                    throw std::runtime_error{ "cannot write checkpoint " + *options.checkpoint_path };
                out << run.checkpoint.to_json().dump() << '\n';
            }

            auto evaluate(const vector<SimpleGraph> & graphs, size_t begin, size_t end) -> vector<Verdict>
            {
                vector<Verdict> verdicts(end - begin);
                unsigned jobs = std::max(1u, options.jobs);
                if (jobs == 1 || end - begin < 2) {
                    for (size_t i = begin ; i < end ; ++i)
                        verdicts[i - begin] = judge(solver, graphs[i], k);
                    return verdicts;
                }

                vector<std::thread> workers;
                vector<std::exception_ptr> errors(jobs);
                for (unsigned w = 0 ; w < jobs ; ++w)
                    workers.emplace_back([&, w] {
                        try {
                            for (size_t i = begin + w ; i < end ; i += jobs)
                                verdicts[i - begin] = judge(solver, graphs[i], k);
                        }
                        catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                for (auto & t : workers)
                    t.join();
                for (auto & e : errors)
                    if (e)
                        std::rethrow_exception(e);
                return verdicts;
            }

            auto record(const SimpleGraph & g) -> void
            {
                for (auto & f : run.found)
                    if (f.size() == g.size() && f.edge_count() == g.edge_count() && isomorphic(f, g))
                        return;
                run.found.push_back(g);
                run.checkpoint.found.push_back(emit_graph6(g));
            }

            // false if the run budget ran out part way through
            auto sweep(const vector<SimpleGraph> & graphs, size_t start) -> bool
            {
                size_t i = start;
                while (i < graphs.size()) {
                    auto left = budget_left();
                    if (0 == left)
                        return false;
                    auto chunk = std::min<uint64_t>({ graphs.size() - i, options.flush_every - since_flush, left });
                    auto verdicts = evaluate(graphs, i, i + chunk);
                    for (size_t j = 0 ; j < chunk ; ++j) {
                        auto & v = verdicts[j];
                        ++run.stats.examined;
                        ++(v.member ? run.stats.members : run.stats.non_members);
                        if (v.forbidden)
                            record(graphs[i + j]);
                    }
                    i += chunk;
                    since_flush += chunk;
                    run.checkpoint.counter = i;
                    if (since_flush >= options.flush_every)
                        flush();
                }
                return true;
            }

            auto verify() -> void
            {
                for (auto & g : run.found) {
                    auto v = judge(solver, g, k);
                    if (! v.forbidden)
                        throw std::logic_error{ "mined graph " + emit_graph6(g) + " failed re-verification" };

                    bool cheap = oracle_work(run.q, g.size(), g.edge_count()) <= options.oracle_budget;
                    for (size_t x = 0 ; x < g.size() && cheap ; ++x) {
                        auto h = g.without_vertex(x);
                        cheap = oracle_work(run.q, h.size(), h.edge_count()) <= options.oracle_budget;
                    }
                    if (! cheap)
                        continue;

                    bool ok = oracle_min_rank(g, field, options.oracle_budget) > k;
                    for (size_t x = 0 ; x < g.size() && ok ; ++x)
                        ok = oracle_min_rank(g.without_vertex(x), field, options.oracle_budget) <= k;
                    if (! ok)
                        throw std::logic_error{ "brute force disagrees about mined graph " + emit_graph6(g) };
                    ++run.stats.oracle_verified;
                }
            }

            auto finish(bool complete) -> MinerRun
            {
                run.complete = complete;
                if (complete)
                    verify();
                flush();
                return std::move(run);
            }
        };
    }

    auto enumerate_graphs_upto(size_t n_max) -> vector<vector<SimpleGraph>>
    {
        if (n_max > max_internal_order)
            throw std::invalid_argument{ "internal enumeration stops at " + std::to_string(max_internal_order)
                + " vertices; supply a graph6 stream for larger orders" };
        vector<vector<SimpleGraph>> result{ { SimpleGraph(0) } };
        for (size_t n = 1 ; n <= n_max ; ++n)
            result.push_back(extend(result.back(), n));
        return result;
    }

    auto enumerate_graphs(size_t n) -> vector<SimpleGraph>
    {
        return std::move(enumerate_graphs_upto(n).back());
    }

    auto MinerCheckpoint::to_json() const -> nlohmann::json
    {
        return nlohmann::json{ { "q", q }, { "k", k }, { "n", n }, { "counter", counter }, { "found", found } };
    }

    auto MinerCheckpoint::from_json(const nlohmann::json & j) -> MinerCheckpoint
    {
        MinerCheckpoint c;
        c.q = j.at("q").get<unsigned>();
        c.k = j.at("k").get<size_t>();
        c.n = j.at("n").get<size_t>();
        c.counter = j.at("counter").get<uint64_t>();
        c.found = j.at("found").get<vector<string>>();
        return c;
    }

    auto mine(const FieldPtr & field, size_t k, size_t n_max, const MinerOptions & options) -> MinerRun
    {
        auto orders = enumerate_graphs_upto(n_max);
        Engine engine(field, k, n_max, options);

        size_t first_n = 1, first_counter = 0;
        if (options.resume) {
            first_n = std::max<size_t>(1, options.resume->n);
            first_counter = options.resume->counter;
        }

        for (size_t n = first_n ; n <= n_max ; ++n) {
            engine.run.checkpoint.n = n;
            engine.run.checkpoint.counter = (n == first_n) ? first_counter : 0;
            if (! engine.sweep(orders[n], engine.run.checkpoint.counter))
                return engine.finish(false);
        }
        return engine.finish(true);
    }

    auto mine_stream(const FieldPtr & field, size_t k, const vector<SimpleGraph> & graphs, const MinerOptions & options) -> MinerRun
    {
        Engine engine(field, k, 0, options);
        for (auto & g : graphs)
            engine.run.n_max = std::max(engine.run.n_max, g.size());
        engine.run.checkpoint.n = 0;
        auto start = options.resume ? options.resume->counter : 0;
        engine.run.checkpoint.counter = start;
        return engine.finish(engine.sweep(graphs, start));
    }

    namespace
    {
        auto components(const SimpleGraph & g) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            vector<bool> seen(g.size(), false);
            for (size_t s = 0 ; s < g.size() ; ++s) {
                if (seen[s])
                    continue;
                vector<int> comp{ int(s) };
                seen[s] = true;
                for (size_t i = 0 ; i < comp.size() ; ++i) {
                    auto & row = g.neighbours(comp[i]);
                    for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                        if (! seen[u]) {
                            seen[u] = true;
                            comp.push_back(u);
                        }
                }
                result.push_back(std::move(comp));
            }
            return result;
        }

        auto is_clique(const SimpleGraph & g) -> bool
        {
            return g.edge_count() * 2 == g.size() * (g.size() - 1);
        }

        // connected, with both sides nonempty
        auto is_complete_bipartite(const SimpleGraph & g) -> bool
        {
            if (g.size() < 2)
                return false;
            auto & side = g.neighbours(0);
            auto a = g.size() - side.count();
            auto b = side.count();
            if (0 == b)
                return false;
            for (size_t v = 0 ; v < g.size() ; ++v) {
                bool left = (v == 0) || ! side[v];
                if (g.degree(v) != (left ? b : a))
                    return false;
                auto & row = g.neighbours(v);
                for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                    if (left == ((u == 0) || ! side[u]))
                        return false;
            }
            return true;
        }
    }

    auto check_f2r2_form(const SimpleGraph & g) -> bool
    {
        auto h = g.complement();
        vector<int> keep;
        for (size_t v = 0 ; v < h.size() ; ++v)
            if (h.degree(v) + 1 != h.size())
                keep.push_back(v);
        auto rest = h.induced(keep);

        vector<SimpleGraph> big;
        size_t singletons = 0;
        for (auto & c : components(rest)) {
            if (c.size() == 1)
                ++singletons;
            else
                big.push_back(rest.induced(c));
        }

        // K_{s1} u K_{s2} u K_{s3}
        bool all_cliques = std::all_of(big.begin(), big.end(), [] (const SimpleGraph & c) { return is_clique(c); });
        if (all_cliques && big.size() + singletons <= 3)
            return true;

        // K_s u K_{p,q}; K_{0,q} is q isolated vertices
        switch (big.size()) {
            case 0:
                return true;
            case 1:
                return is_clique(big[0]) || (is_complete_bipartite(big[0]) && singletons <= 1);
            case 2:
                return 0 == singletons && (
                        (is_clique(big[0]) && is_complete_bipartite(big[1])) ||
                        (is_clique(big[1]) && is_complete_bipartite(big[0])));
            default:
                return false;
        }
    }
}
