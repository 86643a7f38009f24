/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/graphs.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace minrank
{
    SimpleGraph::SimpleGraph(size_t n) :
        _rows(n, Bits(n))
    {
    }

    SimpleGraph::SimpleGraph(size_t n, const vector<pair<int, int>> & edges) :
        SimpleGraph(n)
    {
        for (auto & [u, v] : edges)
            add_edge(u, v);
    }

    namespace
    {
        auto check_vertex(int v, size_t n) -> void
        {
            if (v < 0 || size_t(v) >= n)
                throw GraphError{ "vertex " + std::to_string(v) + " out of range for a graph on " + std::to_string(n) + " vertices" };
        }
    }

    auto SimpleGraph::add_edge(int u, int v) -> void
    {
        check_vertex(u, size());
        check_vertex(v, size());
        if (u == v)
            throw GraphError{ "simple graphs cannot have loops" };
        _rows.at(u).set(v);
        _rows.at(v).set(u);
    }

    auto SimpleGraph::remove_edge(int u, int v) -> void
    {
        check_vertex(u, size());
        check_vertex(v, size());
        _rows.at(u).reset(v);
        _rows.at(v).reset(u);
    }

    auto SimpleGraph::edge_count() const -> size_t
    {
        size_t total = 0;
        for (auto & r : _rows)
            total += r.count();
        return total / 2;
    }

    auto SimpleGraph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (size_t u = 0 ; u < size() ; ++u)
            for (auto v = _rows[u].find_next(u) ; v != Bits::npos ; v = _rows[u].find_next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto SimpleGraph::complement() const -> SimpleGraph
    {
        SimpleGraph result(size());
        for (size_t v = 0 ; v < size() ; ++v) {
            result._rows[v] = ~_rows[v];
            result._rows[v].reset(v);
        }
        return result;
    }

    auto SimpleGraph::induced(const vector<int> & vertices) const -> SimpleGraph
    {
        SimpleGraph result(vertices.size());
        for (size_t i = 0 ; i < vertices.size() ; ++i)
            for (size_t j = i + 1 ; j < vertices.size() ; ++j)
                if (adjacent(vertices[i], vertices[j]))
                    result.add_edge(i, j);
        return result;
    }

    auto SimpleGraph::without_vertex(int v) const -> SimpleGraph
    {
        vector<int> keep;
        for (size_t u = 0 ; u < size() ; ++u)
            if (int(u) != v)
                keep.push_back(u);
        return induced(keep);
    }

    LoopedGraph::LoopedGraph(size_t n) :
        _rows(n, Bits(n)),
        _loops(n)
    {
    }

    auto LoopedGraph::from_simple(const SimpleGraph & g) -> LoopedGraph
    {
        LoopedGraph result(g.size());
        for (size_t v = 0 ; v < g.size() ; ++v)
            result._rows[v] = g.neighbours(v);
        return result;
    }

    auto LoopedGraph::add_edge(int u, int v) -> void
    {
        check_vertex(u, size());
        check_vertex(v, size());
        if (u == v) {
            _loops.set(u);
            return;
        }
        _rows.at(u).set(v);
        _rows.at(v).set(u);
    }

    auto LoopedGraph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (size_t u = 0 ; u < size() ; ++u)
            for (auto v = _rows[u].find_next(u) ; v != Bits::npos ; v = _rows[u].find_next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto LoopedGraph::complement() const -> LoopedGraph
    {
        LoopedGraph result(size());
        for (size_t v = 0 ; v < size() ; ++v) {
            result._rows[v] = ~_rows[v];
            result._rows[v].reset(v);
        }
        result._loops = ~_loops;
        return result;
    }

    auto LoopedGraph::simple_version() const -> SimpleGraph
    {
        SimpleGraph result(size());
        for (auto & [u, v] : edges())
            result.add_edge(u, v);
        return result;
    }

    auto LoopedGraph::induced(const vector<int> & vertices) const -> LoopedGraph
    {
        LoopedGraph result(vertices.size());
        for (size_t i = 0 ; i < vertices.size() ; ++i) {
            result.set_loop(i, looped(vertices[i]));
            for (size_t j = i + 1 ; j < vertices.size() ; ++j)
                if (adjacent(vertices[i], vertices[j]))
                    result.add_edge(i, j);
        }
        return result;
    }

    auto parse_graph6(string_view text) -> SimpleGraph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);

        constexpr string_view header = ">>graph6<<";
        if (text.starts_with(">>")) {
            if (! text.starts_with(header))
                throw GraphError{ "malformed graph6 header" };
            text.remove_prefix(header.size());
        }

        if (text.empty())
            throw GraphError{ "empty graph6 string" };

        for (unsigned char c : text)
            if (c < 63 || c > 126)
                throw GraphError{ "graph6 character out of range" };

        size_t pos = 0;
        auto take_bits = [&] (int bytes) -> uint64_t {
            if (pos + bytes > text.size())
                throw GraphError{ "truncated graph6 size field" };
            uint64_t v = 0;
            for (int i = 0 ; i < bytes ; ++i)
                v = (v << 6) | uint64_t(text[pos++] - 63);
            return v;
        };

        uint64_t n;
        if (text[0] != 126)
            n = take_bits(1);
        else if (text.size() > 1 && text[1] != 126) {
            pos = 1;
            n = take_bits(3);
        }
        else {
            pos = 2;
            n = take_bits(6);
        }

        if (n > (1u << 20))
            throw GraphError{ "graph6 graph too large" };

        uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
        uint64_t bytes = (bits + 5) / 6;
        if (text.size() - pos != bytes)
            throw GraphError{ "graph6 body has the wrong length" };

        SimpleGraph result(n);
        uint64_t k = 0;
        for (uint64_t j = 1 ; j < n ; ++j)
            for (uint64_t i = 0 ; i < j ; ++i, ++k) {
                auto byte = text[pos + k / 6] - 63;
                if (byte & (1 << (5 - k % 6)))
                    result.add_edge(i, j);
            }
        if (k % 6 != 0) {
            auto last = text.back() - 63;
            if (last & ((1 << (6 - k % 6)) - 1))
                throw GraphError{ "graph6 padding bits are not zero" };
        }
        return result;
    }

    auto emit_graph6(const SimpleGraph & g) -> string
    {
        uint64_t n = g.size();
        string result;
        if (n <= 62)
            result.push_back(char(n + 63));
        else if (n <= 258047) {
            result.push_back(126);
            for (int s = 12 ; s >= 0 ; s -= 6)
                result.push_back(char(((n >> s) & 63) + 63));
        }
        else {
            result.push_back(126);
            result.push_back(126);
            for (int s = 30 ; s >= 0 ; s -= 6)
                result.push_back(char(((n >> s) & 63) + 63));
        }

        int acc = 0, used = 0;
        for (uint64_t j = 1 ; j < n ; ++j)
            for (uint64_t i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++used == 6) {
                    result.push_back(char(acc + 63));
                    acc = used = 0;
                }
            }
        if (used > 0)
            result.push_back(char((acc << (6 - used)) + 63));
        return result;
    }

    auto twin_reduce(const SimpleGraph & g) -> TwinReduction
    {
        auto n = g.size();
        vector<vector<int>> classes(n);
        vector<ClassKind> kinds(n, ClassKind::free);
        vector<bool> alive(n, true);
        vector<Bits> rows(n);
        for (size_t v = 0 ; v < n ; ++v) {
            classes[v] = { int(v) };
            rows[v] = g.neighbours(v);
        }

        auto independent_kind = [] (ClassKind k) { return k != ClassKind::looped; };
        auto clique_kind = [] (ClassKind k) { return k != ClassKind::nonlooped; };

        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0 ; i < n ; ++i) {
                if (! alive[i])
                    continue;
                for (size_t j = i + 1 ; j < n ; ++j) {
                    if (! alive[j])
                        continue;
                    bool adj = rows[i][j];
                    bool twins;
                    if (adj) {
                        if (! clique_kind(kinds[i]) || ! clique_kind(kinds[j]))
                            continue;
                        auto a = rows[i], b = rows[j];
                        a.reset(j);
                        b.reset(i);
                        twins = a == b;
                    }
                    else {
                        if (! independent_kind(kinds[i]) || ! independent_kind(kinds[j]))
                            continue;
                        twins = rows[i] == rows[j];
                    }
                    if (! twins)
                        continue;

                    classes[i].insert(classes[i].end(), classes[j].begin(), classes[j].end());
                    classes[j].clear();
                    kinds[i] = adj ? ClassKind::looped : ClassKind::nonlooped;
                    alive[j] = false;
                    for (auto v = rows[j].find_first() ; v != Bits::npos ; v = rows[j].find_next(v))
                        rows[v].reset(j);
                    rows[j].reset();
                    changed = true;
                }
            }
        }

        vector<int> index(n, -1);
        TwinReduction result;
        for (size_t v = 0 ; v < n ; ++v)
            if (alive[v]) {
                index[v] = result.classes.size();
                std::sort(classes[v].begin(), classes[v].end());
                result.classes.push_back(std::move(classes[v]));
                result.kinds.push_back(kinds[v]);
            }

        result.quotient = LoopedGraph(result.classes.size());
        for (size_t v = 0 ; v < n ; ++v) {
            if (! alive[v])
                continue;
            result.quotient.set_loop(index[v], kinds[v] == ClassKind::looped);
            for (auto u = rows[v].find_next(v) ; u != Bits::npos ; u = rows[v].find_next(u))
                result.quotient.add_edge(index[v], index[u]);
        }
        return result;
    }

    auto blow_up(const LoopedGraph & g, const vector<size_t> & sizes) -> SimpleGraph
    {
        if (sizes.size() != g.size())
            throw GraphError{ "blow_up needs one size per vertex" };
        vector<size_t> start(sizes.size() + 1, 0);
        std::partial_sum(sizes.begin(), sizes.end(), start.begin() + 1);
        SimpleGraph result(start.back());
        for (size_t u = 0 ; u < g.size() ; ++u) {
            if (g.looped(u))
                for (auto x = start[u] ; x < start[u + 1] ; ++x)
                    for (auto y = x + 1 ; y < start[u + 1] ; ++y)
                        result.add_edge(x, y);
            for (size_t v = u + 1 ; v < g.size() ; ++v)
                if (g.adjacent(u, v))
                    for (auto x = start[u] ; x < start[u + 1] ; ++x)
                        for (auto y = start[v] ; y < start[v + 1] ; ++y)
                            result.add_edge(x, y);
        }
        return result;
    }

    auto reconstruct(const TwinReduction & r) -> SimpleGraph
    {
        vector<size_t> sizes;
        for (auto & c : r.classes)
            sizes.push_back(c.size());
        return blow_up(r.quotient, sizes);
    }

    namespace
    {
        struct IsoSearch
        {
            const LoopedGraph & a, & b;
            uint64_t budget, nodes = 0;
            vector<int> order = {}, map_to = {};
            vector<bool> used = {};
            vector<vector<int>> candidates = {};

            auto search(size_t depth) -> IsomorphismResult
            {
                if (depth == order.size())
                    return IsomorphismResult::isomorphic;
                if (++nodes > budget)
                    return IsomorphismResult::budget_exhausted;

                int v = order[depth];
                for (int w : candidates[v]) {
                    if (used[w])
                        continue;
                    bool ok = true;
                    for (size_t d = 0 ; d < depth && ok ; ++d) {
                        int u = order[d];
                        ok = a.adjacent(v, u) == b.adjacent(w, map_to[u]);
                    }
                    if (! ok)
                        continue;
                    map_to[v] = w;
                    used[w] = true;
                    auto r = search(depth + 1);
                    if (r != IsomorphismResult::not_isomorphic)
                        return r;
                    used[w] = false;
                }
                return IsomorphismResult::not_isomorphic;
            }
        };

        auto invariants(const LoopedGraph & g) -> vector<std::tuple<bool, size_t, vector<size_t>>>
        {
            vector<std::tuple<bool, size_t, vector<size_t>>> result;
            for (size_t v = 0 ; v < g.size() ; ++v) {
                vector<size_t> nd;
                auto & row = g.neighbours(v);
                for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                    nd.push_back(g.neighbours(u).count() * 2 + (g.looped(u) ? 1 : 0));
                std::sort(nd.begin(), nd.end());
                result.emplace_back(g.looped(v), row.count(), std::move(nd));
            }
            return result;
        }
    }

    auto are_isomorphic(const LoopedGraph & a, const LoopedGraph & b, uint64_t node_budget) -> IsomorphismResult
    {
        auto n = a.size();
        if (n != b.size() || a.loops().count() != b.loops().count() || a.edges().size() != b.edges().size())
            return IsomorphismResult::not_isomorphic;

        auto ia = invariants(a), ib = invariants(b);
        {
            auto sa = ia, sb = ib;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return IsomorphismResult::not_isomorphic;
        }

        IsoSearch s{ a, b, node_budget };
        s.map_to.assign(n, -1);
        s.used.assign(n, false);
        s.candidates.resize(n);
        for (size_t v = 0 ; v < n ; ++v)
            for (size_t w = 0 ; w < n ; ++w)
                if (ia[v] == ib[w])
                    s.candidates[v].push_back(w);

        // connectivity-first order, most constrained first
        vector<bool> placed(n, false);
        vector<size_t> links(n, 0);
        for (size_t step = 0 ; step < n ; ++step) {
            int best = -1;
            for (size_t v = 0 ; v < n ; ++v) {
                if (placed[v])
                    continue;
                if (best == -1 || std::tuple(links[v], -long(s.candidates[v].size()), a.neighbours(v).count())
                        > std::tuple(links[best], -long(s.candidates[best].size()), a.neighbours(best).count()))
                    best = v;
            }
            placed[best] = true;
            s.order.push_back(best);
            auto & row = a.neighbours(best);
            for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                ++links[u];
        }

        return s.search(0);
    }

    auto are_isomorphic(const SimpleGraph & a, const SimpleGraph & b, uint64_t node_budget) -> IsomorphismResult
    {
        return are_isomorphic(LoopedGraph::from_simple(a), LoopedGraph::from_simple(b), node_budget);
    }

    auto relabel(const SimpleGraph & g, const vector<int> & permutation) -> SimpleGraph
    {
        SimpleGraph result(g.size());
        for (auto & [u, v] : g.edges())
            result.add_edge(permutation.at(u), permutation.at(v));
        return result;
    }

    namespace named
    {
        auto complete(size_t n) -> SimpleGraph
        {
            SimpleGraph g(n);
            for (size_t i = 0 ; i < n ; ++i)
                for (size_t j = i + 1 ; j < n ; ++j)
                    g.add_edge(i, j);
            return g;
        }

        auto path(size_t n) -> SimpleGraph
        {
            SimpleGraph g(n);
            for (size_t i = 0 ; i + 1 < n ; ++i)
                g.add_edge(i, i + 1);
            return g;
        }

        auto empty(size_t n) -> SimpleGraph
        {
            return SimpleGraph(n);
        }

        auto complete_multipartite(const vector<size_t> & parts) -> SimpleGraph
        {
            LoopedGraph k(parts.size());
            for (size_t i = 0 ; i < parts.size() ; ++i)
                for (size_t j = i + 1 ; j < parts.size() ; ++j)
                    k.add_edge(i, j);
            return blow_up(k, parts);
        }

        auto fullhouse() -> SimpleGraph
        {
            return SimpleGraph(5, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 1, 3 }, { 1, 4 }, { 2, 3 }, { 2, 4 }, { 3, 4 } });
        }
    }
}
