/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/oracle.hh>

#include <limits>
#include <string>
#include <utility>
#include <vector>

using std::size_t;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace minrank
{
    namespace
    {
        // rank of an n x n matrix of reps, destroying it
        auto eliminate(const Field & f, vector<uint32_t> & a, size_t n) -> size_t
        {
            size_t r = 0;
            for (size_t c = 0 ; c < n && r < n ; ++c) {
                size_t p = r;
                while (p < n && 0 == a[p * n + c])
                    ++p;
                if (p == n)
                    continue;
                if (p != r)
                    for (size_t j = 0 ; j < n ; ++j)
                        std::swap(a[p * n + j], a[r * n + j]);

                auto inv = f.inv(Element{ a[r * n + c] });
                for (size_t i = r + 1 ; i < n ; ++i) {
                    if (0 == a[i * n + c])
                        continue;
                    auto factor = f.mul(Element{ a[i * n + c] }, inv);
                    for (size_t j = c ; j < n ; ++j)
                        a[i * n + j] = f.sub(Element{ a[i * n + j] }, f.mul(factor, Element{ a[r * n + j] })).rep;
                }
                ++r;
            }
            return r;
        }

        // little-endian counter with digits in [lo, hi); false once it wraps
        auto advance(vector<uint32_t> & digits, uint32_t lo, uint32_t hi) -> bool
        {
            for (auto & d : digits) {
                if (++d < hi)
                    return true;
                d = lo;
            }
            return false;
        }
    }

    auto oracle_work(unsigned q, size_t n, size_t m) -> uint64_t
    {
        constexpr auto top = std::numeric_limits<uint64_t>::max();
        uint64_t work = 1;
        auto times = [&] (uint64_t x) {
            if (x != 0 && work > top / x)
                work = top;
            else
                work *= x;
        };
        for (size_t i = 0 ; i < n ; ++i)
            times(q);
        for (size_t i = 0 ; i < m ; ++i)
            times(q - 1);
        return work;
    }

    auto oracle_min_rank(const SimpleGraph & g, const FieldPtr & field, uint64_t budget) -> size_t
    {
        auto & f = *field;
        auto n = g.size();
        auto edges = g.edges();
        auto work = oracle_work(f.order(), n, edges.size());
        if (work > budget)
            throw OracleBudgetExceeded{ "oracle needs " + std::to_string(work) + " matrices, budget is " + std::to_string(budget) };

        size_t floor = edges.empty() ? 0 : 1;
        size_t best = n;

        vector<uint32_t> diag(n, 0), off(edges.size(), 1), a(n * n);
        do {
            std::fill(off.begin(), off.end(), 1);
            do {
                std::fill(a.begin(), a.end(), 0);
                for (size_t i = 0 ; i < n ; ++i)
                    a[i * n + i] = diag[i];
                for (size_t e = 0 ; e < edges.size() ; ++e) {
                    auto [u, v] = edges[e];
                    a[u * n + v] = a[v * n + u] = off[e];
                }
                auto r = eliminate(f, a, n);
                if (r < best)
                    best = r;
                if (best == floor)
                    return best;
            } while (advance(off, 1, f.order()));
        } while (advance(diag, 0, f.order()));

        return best;
    }
}
