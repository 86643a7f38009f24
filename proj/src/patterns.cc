/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/patterns.hh>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

namespace minrank
{
    namespace
    {
        auto ipow(long long base, size_t exp) -> long long
        {
            long long result = 1;
            for (size_t i = 0 ; i < exp ; ++i)
                result *= base;
            return result;
        }

        auto build_graph(const PointList & points, const Matrix & b) -> LoopedGraph
        {
            auto & f = b.field();
            auto n = points.size(), k = points.dimension();
            // images B x_j, so each pairing is one dot product
            vector<vector<Element>> images(n, vector<Element>(k, f.zero()));
            for (size_t j = 0 ; j < n ; ++j)
                for (size_t r = 0 ; r < k ; ++r) {
                    Element s = f.zero();
                    for (size_t c = 0 ; c < k ; ++c)
                        s = f.add(s, f.mul(b(r, c), points[j].coords[c]));
                    images[j][r] = s;
                }

            LoopedGraph g(n);
            for (size_t i = 0 ; i < n ; ++i)
                for (size_t j = i ; j < n ; ++j) {
                    Element s = f.zero();
                    for (size_t r = 0 ; r < k ; ++r)
                        s = f.add(s, f.mul(points[i].coords[r], images[j][r]));
                    if (s.rep != 0)
                        g.add_edge(i, j);
                }
            return g;
        }
    }

    auto generate(const FieldPtr & field, size_t k, size_t vertex_budget) -> PatternSet
    {
        auto n = point_count(field->order(), k);
        if (n > vertex_budget)
            throw BudgetExceeded{ "PG(" + std::to_string(k) + "-1, " + std::to_string(field->order()) + ") has more than "
                + std::to_string(vertex_budget) + " points" };

        PatternSet result{ field, k, enumerate_points(field, k), {} };
        if (0 == k) {
            result.patterns.push_back(Pattern{ Matrix(field, 0, 0), LoopedGraph(0) });
            return result;
        }

        for (auto & b : canonical_representatives(field, k)) {
            auto g = build_graph(result.points, b);
            result.patterns.push_back(Pattern{ b, std::move(g) });
        }
        return result;
    }

    auto pattern_matrix(const PatternSet & ps, size_t index) -> Matrix
    {
        auto u = ps.points.as_matrix();
        return u.transpose() * ps.patterns.at(index).form * u;
    }

    auto CountReport::ok() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CountCheck & c) { return c.passed; });
    }

    auto CountReport::failures() const -> vector<CountCheck>
    {
        vector<CountCheck> result;
        std::copy_if(checks.begin(), checks.end(), std::back_inserter(result), [] (const CountCheck & c) { return ! c.passed; });
        return result;
    }

    auto expected_nonlooped_counts(unsigned q, bool even_characteristic, size_t k) -> vector<long long>
    {
        long long qq = q;
        if (0 == k)
            return { 0 };
        if (even_characteristic) {
            vector<long long> result{ (ipow(qq, k - 1) - 1) / (qq - 1) };
            if (k % 2 == 0)
                result.push_back((ipow(qq, k) - 1) / (qq - 1));
            return result;
        }
        if (k % 2 == 1) {
            auto m = (k - 1) / 2;
            return { (ipow(qq, 2 * m) - 1) / (qq - 1) };
        }
        auto m = k / 2;
        return { (ipow(qq, m) - 1) * (ipow(qq, m - 1) + 1) / (qq - 1),
                 (ipow(qq, m) + 1) * (ipow(qq, m - 1) - 1) / (qq - 1) };
    }

    auto verify_counts(const PatternSet & ps) -> CountReport
    {
        CountReport report;
        auto q = ps.field->order();
        auto k = ps.k;
        long long expected_n = (ipow(q, k) - 1) / (q - 1);
        long long expected_degree = k ? ipow(q, k - 1) : 0;

        vector<long long> nonlooped;
        for (size_t p = 0 ; p < ps.patterns.size() ; ++p) {
            auto & g = ps.patterns[p].graph;
            long long n = g.size();
            report.checks.push_back({ "vertex count (q^k-1)/(q-1)", p, expected_n, n, n == expected_n });

            long long bad_degree = 0;
            for (long long v = 0 ; v < n ; ++v)
                if (static_cast<long long>(g.degree(v)) != expected_degree)
                    ++bad_degree;
            report.checks.push_back({ "regular of degree q^(k-1), loop counts one", p, 0, bad_degree, 0 == bad_degree });

            long long white = n - static_cast<long long>(g.loops().count());
            nonlooped.push_back(white);

            if (3 == k) {
                vector<int> whites;
                for (long long v = 0 ; v < n ; ++v)
                    if (! g.looped(v))
                        whites.push_back(v);
                long long missing = 0;
                for (size_t a = 0 ; a < whites.size() ; ++a)
                    for (size_t b = a + 1 ; b < whites.size() ; ++b)
                        if (! g.adjacent(whites[a], whites[b]))
                            ++missing;
                report.checks.push_back({ "nonlooped vertices form a clique (k=3)", p, 0, missing, 0 == missing });

                long long bad = 0;
                for (int v : whites) {
                    long long white_nbrs = 0, black_nbrs = 0;
                    auto & row = g.neighbours(v);
                    for (auto u = row.find_first() ; u != Bits::npos ; u = row.find_next(u))
                        (g.looped(u) ? black_nbrs : white_nbrs) += 1;
                    if (white_nbrs != q || black_nbrs != static_cast<long long>(q) * q - q)
                        ++bad;
                }
                report.checks.push_back({ "nonlooped vertex has q nonlooped and q^2-q looped neighbours (k=3)", p, 0, bad, 0 == bad });
            }
        }

        auto expected = expected_nonlooped_counts(q, ps.field->is_even(), k);
        if (ps.field->is_even() || k % 2 == 1) {
            for (size_t p = 0 ; p < nonlooped.size() ; ++p) {
                auto e = p < expected.size() ? expected[p] : -1;
                report.checks.push_back({ ps.field->is_even() ? "nonlooped count, characteristic 2" : "nonlooped count, odd q and odd k",
                        p, e, nonlooped[p], e == nonlooped[p] });
            }
        }
        else {
            auto got = nonlooped;
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            for (size_t i = 0 ; i < std::max(got.size(), expected.size()) ; ++i) {
                auto e = i < expected.size() ? expected[i] : -1, a = i < got.size() ? got[i] : -1;
                report.checks.push_back({ "nonlooped counts as a set, odd q and even k", i, e, a, e == a });
            }
        }
        return report;
    }
}
