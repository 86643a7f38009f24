/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_REFERENCE_HH
#define MINRANK_GUARD_MINRANK_REFERENCE_HH 1

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace minrank::reference
{
    /**
     * A published U^t B U: the point representatives as the columns of
     * `points` (k rows) and the resulting matrix, over GF(q), for pattern
     * `pattern` of the generated set.
     */
    struct PrintedPattern
    {
        const char * name;
        unsigned q;
        std::size_t k;
        std::size_t pattern;
        std::vector<std::vector<unsigned>> points;
        std::vector<std::vector<unsigned>> matrix;
    };

    /// F2R3, F3R3 and both F2R4 matrices, printed in canonical point order.
    auto printed_patterns() -> const std::vector<PrintedPattern> &;

    /// The two k = 2 matrices over GF(2), zero column dropped; their
    /// columns are (1,0), (0,1), (1,1), which is not canonical order.
    auto observation_patterns() -> const std::vector<PrintedPattern> &;

    /**
     * Regenerates the pattern and compares entrywise, matching printed
     * columns to generated points by projective lookup. With
     * require_canonical_order the printed columns must also be exactly the
     * canonical point list. Returns a description of the first mismatch.
     */
    auto check_printed(const PrintedPattern &, bool require_canonical_order) -> std::optional<std::string>;
}

#endif
