/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_MINER_HH
#define MINRANK_GUARD_MINRANK_MINER_HH 1

#include <minrank/blowup.hh>
#include <minrank/gf.hh>
#include <minrank/graphs.hh>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minrank
{
    inline constexpr std::size_t max_internal_order = 7;

    /**
     * One graph per isomorphism class on n vertices, n <= 7. Each order is
     * grown from the previous one by adding a vertex with every possible
     * neighbourhood and discarding isomorphic copies, so the output order is
     * deterministic.
     */
    auto enumerate_graphs(std::size_t n) -> std::vector<SimpleGraph>;

    /// Same, for every order 0..n_max at once.
    auto enumerate_graphs_upto(std::size_t n_max) -> std::vector<std::vector<SimpleGraph>>;

    /// Progress record: the next graph to look at is number `counter` of order `n`.
    struct MinerCheckpoint
    {
        unsigned q = 0;
        std::size_t k = 0, n = 0;
        std::uint64_t counter = 0;
        std::vector<std::string> found;         // graph6

        auto to_json() const -> nlohmann::json;
        static auto from_json(const nlohmann::json &) -> MinerCheckpoint;
    };

    struct MinerOptions
    {
        std::optional<std::string> checkpoint_path;     // written every flush_every graphs and at the end
        std::optional<MinerCheckpoint> resume;
        std::uint64_t budget = 0;                       // graphs to examine in this run; 0 = no limit
        std::uint64_t flush_every = 10'000;
        unsigned jobs = 1;
        std::uint64_t oracle_budget = 1'000'000;        // re-verification by brute force when this cheap
    };

    struct MinerStats
    {
        std::uint64_t examined = 0, members = 0, non_members = 0;
        std::uint64_t oracle_verified = 0;              // found graphs also confirmed by brute force
    };

    struct MinerRun
    {
        unsigned q = 0;
        std::size_t k = 0, n_max = 0;
        std::vector<SimpleGraph> found;
        bool complete = false;
        MinerCheckpoint checkpoint;
        MinerStats stats;
    };

    /**
     * Minimal forbidden induced subgraphs for minimum rank <= k over the
     * field, among all graphs of order at most n_max (n_max <= 7). A graph is
     * reported when it is not a member but every vertex-deleted subgraph is;
     * that is re-checked before the run returns.
     */
    auto mine(const FieldPtr & field, std::size_t k, std::size_t n_max, const MinerOptions & options = {}) -> MinerRun;

    /// As mine, over an external list of graphs; the checkpoint counter indexes the list.
    auto mine_stream(const FieldPtr & field, std::size_t k, const std::vector<SimpleGraph> & graphs,
            const MinerOptions & options = {}) -> MinerRun;

    /**
     * Whether the complement of G, with its universal vertices removed,
     * is K_s u K_{p,q} or K_{s1} u K_{s2} u K_{s3} (any part may be empty).
     * This is the closed-form description of minimum rank at most 2 over
     * GF(2), kept independent of the pattern machinery.
     */
    auto check_f2r2_form(const SimpleGraph & g) -> bool;
}

#endif
