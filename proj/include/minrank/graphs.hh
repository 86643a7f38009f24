/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_GRAPHS_HH
#define MINRANK_GUARD_MINRANK_GRAPHS_HH 1

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minrank
{
    using Bits = boost::dynamic_bitset<>;

    class GraphError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * Undirected graph without loops, stored as bit rows.
     */
    class SimpleGraph
    {
        private:
            std::vector<Bits> _rows;

        public:
            SimpleGraph() = default;
            explicit SimpleGraph(std::size_t n);
            SimpleGraph(std::size_t n, const std::vector<std::pair<int, int>> & edges);

            auto size() const -> std::size_t { return _rows.size(); }

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;
            auto adjacent(int u, int v) const -> bool { return _rows[u][v]; }
            auto neighbours(int v) const -> const Bits & { return _rows[v]; }
            auto degree(int v) const -> std::size_t { return _rows[v].count(); }
            auto edge_count() const -> std::size_t;
            auto edges() const -> std::vector<std::pair<int, int>>;

            auto complement() const -> SimpleGraph;
            auto induced(const std::vector<int> & vertices) const -> SimpleGraph;
            auto without_vertex(int v) const -> SimpleGraph;

            auto operator== (const SimpleGraph &) const -> bool = default;
    };

    /**
     * Undirected graph where each vertex may carry a loop. Loops are kept
     * apart from the off-diagonal adjacency.
     */
    class LoopedGraph
    {
        private:
            std::vector<Bits> _rows;
            Bits _loops;

        public:
            LoopedGraph() = default;
            explicit LoopedGraph(std::size_t n);

            static auto from_simple(const SimpleGraph &) -> LoopedGraph;

            auto size() const -> std::size_t { return _rows.size(); }

            auto add_edge(int u, int v) -> void;
            auto adjacent(int u, int v) const -> bool { return _rows[u][v]; }
            auto neighbours(int v) const -> const Bits & { return _rows[v]; }
            auto set_loop(int v, bool looped = true) -> void { _loops[v] = looped; }
            auto looped(int v) const -> bool { return _loops[v]; }
            auto loops() const -> const Bits & { return _loops; }

            /// Degree counting a loop as one.
            auto degree(int v) const -> std::size_t { return _rows[v].count() + (_loops[v] ? 1 : 0); }
            auto edges() const -> std::vector<std::pair<int, int>>;

            /// Off-diagonal complement; every loop flag is negated.
            auto complement() const -> LoopedGraph;
            auto simple_version() const -> SimpleGraph;
            auto induced(const std::vector<int> & vertices) const -> LoopedGraph;

            auto operator== (const LoopedGraph &) const -> bool = default;
    };

    auto parse_graph6(std::string_view text) -> SimpleGraph;
    auto emit_graph6(const SimpleGraph &) -> std::string;

    enum class ClassKind
    {
        free,           // singleton
        looped,         // clique of two or more
        nonlooped       // independent set of two or more
    };

    struct TwinReduction
    {
        std::vector<std::vector<int>> classes;
        std::vector<ClassKind> kinds;
        LoopedGraph quotient;           // loop iff the class is ClassKind::looped
    };

    /**
     * Repeatedly merges independent twins and true twins, scanning pairs in
     * lexicographic order, until nothing merges.
     */
    auto twin_reduce(const SimpleGraph &) -> TwinReduction;

    /// Replaces vertex i by sizes[i] vertices: a clique if looped, else an independent set.
    auto blow_up(const LoopedGraph & g, const std::vector<std::size_t> & sizes) -> SimpleGraph;

    /// The quotient of a reduction blown back up by its class sizes.
    auto reconstruct(const TwinReduction &) -> SimpleGraph;

    enum class IsomorphismResult
    {
        isomorphic,
        not_isomorphic,
        budget_exhausted
    };

    auto are_isomorphic(const LoopedGraph & a, const LoopedGraph & b,
            std::uint64_t node_budget = 10'000'000) -> IsomorphismResult;

    auto are_isomorphic(const SimpleGraph & a, const SimpleGraph & b,
            std::uint64_t node_budget = 10'000'000) -> IsomorphismResult;

    auto relabel(const SimpleGraph & g, const std::vector<int> & permutation) -> SimpleGraph;

    namespace named
    {
        auto complete(std::size_t n) -> SimpleGraph;
        auto path(std::size_t n) -> SimpleGraph;
        auto empty(std::size_t n) -> SimpleGraph;
        auto complete_multipartite(const std::vector<std::size_t> & parts) -> SimpleGraph;

        /// (P_3 u 2K_1)^c, labelled as the 5 x 5 matrix with pattern
        /// [[d,1,1,0,0],[1,d,1,1,1],[1,1,d,1,1],[0,1,1,d,1],[0,1,1,1,d]].
        auto fullhouse() -> SimpleGraph;
    }
}

#endif
