/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/blowup.hh>

#include <algorithm>
#include <tuple>

using std::optional;
using std::size_t;
using std::vector;

namespace minrank
{
    auto verify_witness(const SimpleGraph & g, const LoopedGraph & pattern, const BlowupWitness & w) -> bool
    {
        if (w.assignment.size() != g.size())
            return false;
        for (size_t u = 0 ; u < g.size() ; ++u) {
            auto & a = w.assignment[u];
            if (! a) {
                if (g.degree(u) != 0)
                    return false;
                continue;
            }
            if (*a < 0 || size_t(*a) >= pattern.size())
                return false;
        }

        for (size_t u = 0 ; u < g.size() ; ++u)
            for (size_t v = u + 1 ; v < g.size() ; ++v) {
                auto & a = w.assignment[u], & b = w.assignment[v];
                if (! a || ! b)
                    continue;
                bool expect = (*a == *b) ? pattern.looped(*a) : pattern.adjacent(*a, *b);
                if (expect != g.adjacent(u, v))
                    return false;
            }
        return true;
    }

    namespace
    {
        struct ClassSearch
        {
            const TwinReduction & reduction;
            const LoopedGraph & pattern;
            vector<int> assigned;

            auto search(const vector<Bits> & domains, size_t remaining) -> bool
            {
                if (0 == remaining)
                    return true;

                auto c = reduction.classes.size();
                int best = -1;
                for (size_t x = 0 ; x < c ; ++x) {
                    if (assigned[x] != -1)
                        continue;
                    if (best == -1 || std::tuple(domains[x].count(), -long(reduction.classes[x].size()))
                            < std::tuple(domains[best].count(), -long(reduction.classes[best].size())))
                        best = x;
                }

                auto & q = reduction.quotient;
                auto & dom = domains[best];
                for (auto v = dom.find_first() ; v != Bits::npos ; v = dom.find_next(v)) {
                    auto next = domains;
                    bool wipeout = false;
                    for (size_t y = 0 ; y < c && ! wipeout ; ++y) {
                        if (assigned[y] != -1 || int(y) == best)
                            continue;
                        if (q.adjacent(best, y))
                            next[y] &= pattern.neighbours(v);
                        else
                            next[y] -= pattern.neighbours(v);
                        next[y].reset(v);
                        wipeout = next[y].none();
                    }
                    if (wipeout)
                        continue;
                    assigned[best] = v;
                    if (search(next, remaining - 1))
                        return true;
                    assigned[best] = -1;
                }
                return false;
            }
        };
    }

    auto is_blowup(const SimpleGraph & g, const LoopedGraph & pattern) -> optional<BlowupWitness>
    {
        vector<int> active;
        for (size_t v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) != 0)
                active.push_back(v);

        BlowupWitness witness{ vector<optional<int>>(g.size()) };
        if (active.empty())
            return witness;

        auto stripped = g.induced(active);
        auto reduction = twin_reduce(stripped);
        auto c = reduction.classes.size();
        if (c > pattern.size())
            return std::nullopt;

        auto h = pattern.size();
        vector<size_t> pattern_degree(h);
        for (size_t v = 0 ; v < h ; ++v)
            pattern_degree[v] = pattern.neighbours(v).count();

        vector<Bits> domains(c, Bits(h));
        for (size_t x = 0 ; x < c ; ++x) {
            auto degree = reduction.quotient.neighbours(x).count();
            auto non_degree = c - 1 - degree;
            for (size_t v = 0 ; v < h ; ++v) {
                bool loop_ok = true;
                switch (reduction.kinds[x]) {
                    case ClassKind::looped:    loop_ok = pattern.looped(v); break;
                    case ClassKind::nonlooped: loop_ok = ! pattern.looped(v); break;
                    case ClassKind::free:      break;
                }
                if (loop_ok && degree <= pattern_degree[v] && non_degree <= h - 1 - pattern_degree[v])
                    domains[x].set(v);
            }
            if (domains[x].none())
                return std::nullopt;
        }

        ClassSearch search{ reduction, pattern, vector<int>(c, -1) };
        if (! search.search(domains, c))
            return std::nullopt;

        for (size_t x = 0 ; x < c ; ++x)
            for (int member : reduction.classes[x])
                witness.assignment[active[member]] = search.assigned[x];

        if (! verify_witness(g, pattern, witness))
            throw std::logic_error{ "blowup search produced a witness that fails the definition" };
        return witness;
    }

    MinRankSolver::MinRankSolver(FieldPtr field, size_t vertex_budget) :
        _field(std::move(field)),
        _vertex_budget(vertex_budget)
    {
    }

    auto MinRankSolver::patterns(size_t k) const -> std::shared_ptr<const PatternSet>
    {
        {
            std::lock_guard<std::mutex> lock(_mutex);
            auto i = _cache.find(k);
            if (i != _cache.end())
                return i->second;
        }
        auto built = std::make_shared<const PatternSet>(generate(_field, k, _vertex_budget));
        std::lock_guard<std::mutex> lock(_mutex);
        return _cache.emplace(k, std::move(built)).first->second;
    }

    auto MinRankSolver::member(const SimpleGraph & g, size_t k) const -> optional<Membership>
    {
        auto ps = patterns(k);
        for (size_t i = 0 ; i < ps->patterns.size() ; ++i)
            if (auto w = is_blowup(g, ps->patterns[i].graph))
                return Membership{ i, std::move(*w) };
        return std::nullopt;
    }

    auto MinRankSolver::min_rank(const SimpleGraph & g, optional<size_t> max_k) const -> MinRankResult
    {
        size_t active = 0;
        for (size_t v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) != 0)
                ++active;

        for (size_t k = 0 ; ; ++k) {
            if (max_k && k > *max_k)
                return MinRankResult{ std::nullopt, *max_k, std::nullopt };
            if (k > active)
                throw std::logic_error{ "minimum rank sweep passed the number of non-isolated vertices" };

            optional<Membership> m;
            try {
                m = member(g, k);
            }
            catch (const BudgetExceeded &) {
                return MinRankResult{ std::nullopt, k - 1, std::nullopt };
            }
            if (m)
                return MinRankResult{ k, 0, std::move(m) };
        }
    }

    auto multipartite_bound_check(const vector<size_t> & parts, const FieldPtr & field) -> bool
    {
        if (parts.empty())
            throw GraphError{ "multipartite_bound_check needs at least one part" };
        MinRankSolver solver(field);
        return solver.min_rank(named::complete_multipartite(parts), 3).value.has_value();
    }
}
