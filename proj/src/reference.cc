/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/reference.hh>
#include <minrank/patterns.hh>

#include <sstream>

namespace minrank::reference
{
    auto printed_patterns() -> const std::vector<PrintedPattern> &
    {
        static const std::vector<PrintedPattern> cases{
            PrintedPattern{ "F2R3", 2, 3, 0,
            {
                { 0, 1, 0, 1, 0, 1, 1 },
                { 0, 0, 1, 1, 1, 1, 0 },
                { 1, 1, 1, 1, 0, 0, 0 }
            },
            {
                { 1, 1, 1, 1, 0, 0, 0 },
                { 1, 0, 1, 0, 0, 1, 1 },
                { 1, 1, 0, 0, 1, 1, 0 },
                { 1, 0, 0, 1, 1, 0, 1 },
                { 0, 0, 1, 1, 1, 1, 0 },
                { 0, 1, 1, 0, 1, 0, 1 },
                { 0, 1, 0, 1, 0, 1, 1 }
            } },
            PrintedPattern{ "F3R3", 3, 3, 0,
            {
                { 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 1 },
                { 0, 0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 1, 0 },
                { 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0 }
            },
            {
                { 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0 },
                { 1, 2, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1 },
                { 1, 0, 2, 1, 0, 2, 1, 0, 2, 0, 2, 1, 2 },
                { 1, 1, 1, 2, 2, 2, 0, 0, 0, 1, 1, 1, 0 },
                { 1, 2, 0, 2, 0, 1, 0, 1, 2, 1, 2, 0, 1 },
                { 1, 0, 2, 2, 1, 0, 0, 2, 1, 1, 0, 2, 2 },
                { 1, 1, 1, 0, 0, 0, 2, 2, 2, 2, 2, 2, 0 },
                { 1, 2, 0, 0, 1, 2, 2, 0, 1, 2, 0, 1, 1 },
                { 1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 1, 0, 2 },
                { 0, 0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 1, 0 },
                { 0, 1, 2, 1, 2, 0, 2, 0, 1, 1, 2, 0, 1 },
                { 0, 2, 1, 1, 0, 2, 2, 1, 0, 1, 0, 2, 2 },
                { 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 1 }
            } },
            PrintedPattern{ "F2R4, B = I", 2, 4, 0,
            {
                { 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1 },
                { 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0 },
                { 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0 },
                { 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0 }
            },
            {
                { 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0 },
                { 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1 },
                { 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0 },
                { 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1 },
                { 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0 },
                { 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1 },
                { 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0 },
                { 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1 },
                { 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0 },
                { 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1 },
                { 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0 },
                { 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1 },
                { 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0 },
                { 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1 },
                { 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1 }
            } },
            PrintedPattern{ "F2R4, B symplectic", 2, 4, 1,
            {
                { 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1 },
                { 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0 },
                { 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0 },
                { 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0 }
            },
            {
                { 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0 },
                { 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0 },
                { 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1 },
                { 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1 },
                { 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0 },
                { 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0 },
                { 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1 },
                { 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1 },
                { 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0 },
                { 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0 },
                { 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1 },
                { 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1 },
                { 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1 },
                { 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1 },
                { 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0 }
            } }
        };
        return cases;
    }

    auto observation_patterns() -> const std::vector<PrintedPattern> &
    {
        static const std::vector<PrintedPattern> cases{
            PrintedPattern{ "F2R2, B = I", 2, 2, 0,
            {
                { 1, 0, 1 },
                { 0, 1, 1 }
            },
            {
                { 1, 0, 1 },
                { 0, 1, 1 },
                { 1, 1, 0 }
            } },
            PrintedPattern{ "F2R2, B symplectic", 2, 2, 1,
            {
                { 1, 0, 1 },
                { 0, 1, 1 }
            },
            {
                { 0, 1, 1 },
                { 1, 0, 1 },
                { 1, 1, 0 }
            } }
        };
        return cases;
    }

    auto check_printed(const PrintedPattern & c, bool require_canonical_order) -> std::optional<std::string>
    {
        auto field = std::make_shared<const Field>(Field::from_order(c.q));
        auto ps = generate(field, c.k);
        auto full = pattern_matrix(ps, c.pattern);
        auto n = c.matrix.size();

        std::vector<std::size_t> where(n);
        for (std::size_t j = 0 ; j < n ; ++j) {
            std::vector<Element> v;
            for (std::size_t r = 0 ; r < c.k ; ++r)
                v.push_back(field->element(c.points[r][j]));
            auto i = ps.points.index_of(v);
            if (! i)
                return std::string(c.name) + ": printed column " + std::to_string(j) + " is the zero vector";
            if (require_canonical_order && *i != j)
                return std::string(c.name) + ": printed column " + std::to_string(j) + " is canonical point " + std::to_string(*i);
            where[j] = *i;
        }

        if (require_canonical_order && n != ps.points.size())
            return std::string(c.name) + ": printed " + std::to_string(n) + " points, generated " + std::to_string(ps.points.size());

        for (std::size_t i = 0 ; i < n ; ++i)
            for (std::size_t j = 0 ; j < n ; ++j)
                if (full(where[i], where[j]).rep != c.matrix[i][j]) {
                    std::ostringstream s;
                    s << c.name << ": entry (" << i << ", " << j << ") printed " << c.matrix[i][j]
                        << ", generated " << full(where[i], where[j]).rep;
                    return s.str();
                }
        return std::nullopt;
    }
}
