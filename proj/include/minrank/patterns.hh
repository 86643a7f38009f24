/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_PATTERNS_HH
#define MINRANK_GUARD_MINRANK_PATTERNS_HH 1

#include <minrank/gf.hh>
#include <minrank/graphs.hh>
#include <minrank/matrix.hh>
#include <minrank/projective.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrank
{
    class BudgetExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    inline constexpr std::size_t default_vertex_budget = 10'000;

    /**
     * One pattern graph: vertex i is point i of PG(k-1, q) in canonical
     * order, i ~ j (i != j) iff x_i^t B x_j != 0, and i is looped iff
     * x_i^t B x_i != 0. The isolated K_1 that every pattern carries is not
     * stored.
     */
    struct Pattern
    {
        Matrix form;                // B
        LoopedGraph graph;
    };

    struct PatternSet
    {
        FieldPtr field;
        std::size_t k;
        PointList points;
        std::vector<Pattern> patterns;
    };

    /**
     * The graphs whose blowups (with an extra isolated vertex) are exactly the
     * graphs of minimum rank at most k over the field. One pattern for odd k,
     * two for even k. k = 0 gives a single empty pattern.
     *
     * Throws BudgetExceeded if PG(k-1, q) has more than vertex_budget points.
     */
    auto generate(const FieldPtr & field, std::size_t k, std::size_t vertex_budget = default_vertex_budget) -> PatternSet;

    /// The full matrix U^t B U, where U has the canonical points as columns.
    auto pattern_matrix(const PatternSet & ps, std::size_t index) -> Matrix;

    struct CountCheck
    {
        std::string name;
        std::size_t pattern;
        long long expected, actual;
        bool passed;
    };

    struct CountReport
    {
        std::vector<CountCheck> checks;

        auto ok() const -> bool;
        auto failures() const -> std::vector<CountCheck>;
    };

    /**
     * Checks the structural counts every pattern must satisfy: vertex count
     * (q^k-1)/(q-1); regular of degree q^{k-1} with a loop counting one; the
     * number of nonlooped (absolute) vertices; and for k = 3, that the
     * nonlooped vertices form a clique where each has q nonlooped and q^2-q
     * looped neighbours.
     */
    auto verify_counts(const PatternSet & ps) -> CountReport;

    /// Number of nonlooped vertices each pattern must have, in canonical_representatives order
    /// for characteristic 2 and as an unordered pair for odd q with even k.
    auto expected_nonlooped_counts(unsigned q, bool even_characteristic, std::size_t k) -> std::vector<long long>;
}

#endif
