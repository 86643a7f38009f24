/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_ORACLE_HH
#define MINRANK_GUARD_MINRANK_ORACLE_HH 1

#include <minrank/gf.hh>
#include <minrank/graphs.hh>

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace minrank
{
    class OracleBudgetExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

    /// q^n (q-1)^m, saturating at UINT64_MAX.
    auto oracle_work(unsigned q, std::size_t n, std::size_t m) -> std::uint64_t;

    /**
     * Minimum rank by brute force: every diagonal in GF(q)^n and every
     * nonzero choice for the edge entries, ranked by plain elimination. Only
     * field arithmetic is shared with the rest of the library.
     *
     * Throws OracleBudgetExceeded, before doing any work, if q^n (q-1)^m is
     * over the budget.
     */
    auto oracle_min_rank(const SimpleGraph & g, const FieldPtr & field,
            std::uint64_t budget = default_oracle_budget) -> std::size_t;
}

#endif
