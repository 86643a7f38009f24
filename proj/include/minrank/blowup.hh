/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_BLOWUP_HH
#define MINRANK_GUARD_MINRANK_BLOWUP_HH 1

#include <minrank/gf.hh>
#include <minrank/graphs.hh>
#include <minrank/patterns.hh>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace minrank
{
    /**
     * Pattern vertex for each vertex of G. Isolated vertices of G are the
     * K_1 part of the blowup and are left unassigned.
     */
    struct BlowupWitness
    {
        std::vector<std::optional<int>> assignment;
    };

    /// Checks a witness against the blowup definition, pair by pair.
    auto verify_witness(const SimpleGraph & g, const LoopedGraph & pattern, const BlowupWitness & w) -> bool;

    /**
     * Decides whether G is a blowup of pattern u K_1. Isolated vertices are
     * stripped, twins collapsed, and the quotient classes are assigned
     * injectively to loop-compatible pattern vertices by backtracking with
     * forward checking. A returned witness has already passed
     * verify_witness.
     */
    auto is_blowup(const SimpleGraph & g, const LoopedGraph & pattern) -> std::optional<BlowupWitness>;

    struct Membership
    {
        std::size_t pattern;
        BlowupWitness witness;
    };

    struct MinRankResult
    {
        std::optional<std::size_t> value;       // set when the minimum rank was found
        std::size_t exceeds = 0;                // otherwise: minimum rank > exceeds
        std::optional<Membership> certificate;
    };

    /**
     * Minimum rank over one field, by sweeping k upward through the pattern
     * sets. Pattern sets are built on first use and cached; a solver can be
     * shared between threads.
     */
    class MinRankSolver
    {
        private:
            FieldPtr _field;
            std::size_t _vertex_budget;
            mutable std::mutex _mutex;
            mutable std::map<std::size_t, std::shared_ptr<const PatternSet>> _cache;

        public:
            explicit MinRankSolver(FieldPtr field, std::size_t vertex_budget = default_vertex_budget);

            auto field() const -> const FieldPtr & { return _field; }

            /// Throws BudgetExceeded when PG(k-1, q) is over the vertex budget.
            auto patterns(std::size_t k) const -> std::shared_ptr<const PatternSet>;

            /// Blowup certificate for mr(G) <= k, if there is one.
            auto member(const SimpleGraph & g, std::size_t k) const -> std::optional<Membership>;

            auto min_rank(const SimpleGraph & g, std::optional<std::size_t> max_k = std::nullopt) const -> MinRankResult;
    };

    /// Whether K_{parts} has minimum rank at most 3 over the field.
    auto multipartite_bound_check(const std::vector<std::size_t> & parts, const FieldPtr & field) -> bool;
}

#endif
