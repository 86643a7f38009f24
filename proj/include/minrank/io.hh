/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_IO_HH
#define MINRANK_GUARD_MINRANK_IO_HH 1

#include <minrank/gf.hh>
#include <minrank/graphs.hh>
#include <minrank/matrix.hh>
#include <minrank/patterns.hh>
#include <minrank/projective.hh>

#include <json.hpp>

#include <istream>
#include <string>
#include <vector>

namespace minrank
{
    using Json = nlohmann::json;

    auto to_json(const Field &) -> Json;

    /// {"field": {...}, "rows": r, "cols": c, "entries": [...]}, entries row-major as element reps.
    auto to_json(const Matrix &) -> Json;

    /**
     * Reads a matrix. The field comes from "field" ({"p","e"} or {"q"}) or
     * "q" (number or "p^e" string) unless a fallback is given. Entries are
     * either flat row-major with "rows" and "cols", or a list of rows.
     */
    auto matrix_from_json(const Json &, const FieldPtr & fallback = nullptr) -> Matrix;

    /// {"n": n, "loops": [...], "edges": [[u, v], ...]}
    auto to_json(const LoopedGraph &) -> Json;
    auto to_json(const PointList &) -> Json;

    /// Looped vertices drawn filled, nonlooped drawn empty.
    auto to_dot(const LoopedGraph &, const std::string & name = "pattern") -> std::string;

    /// One graph per non-blank line; a ">>graph6<<" header is allowed.
    auto read_graph6_lines(std::istream &) -> std::vector<std::string>;
}

#endif
