/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_PROJECTIVE_HH
#define MINRANK_GUARD_MINRANK_PROJECTIVE_HH 1

#include <minrank/gf.hh>
#include <minrank/matrix.hh>

#include <cstddef>
#include <optional>
#include <vector>

namespace minrank
{
    /**
     * A point of PG(k-1, q), held as the representative whose last nonzero
     * coordinate is 1. Projective equality is therefore literal equality.
     */
    struct ProjPoint
    {
        std::vector<Element> coords;

        auto operator== (const ProjPoint &) const -> bool = default;
    };

    /// Scales a nonzero vector so its last nonzero coordinate is 1. Throws on the zero vector.
    auto normalize_point(const Field & field, std::vector<Element> v) -> ProjPoint;

    /// Number of points of PG(k-1, q), i.e. (q^k - 1)/(q - 1).
    auto point_count(unsigned q, std::size_t k) -> std::size_t;

    /**
     * Every point of PG(k-1, q) in canonical order: for d = k down to 1,
     * the points whose last nonzero coordinate sits at position d, with the
     * d-1 free coordinates counted as a little-endian base-q number.
     */
    class PointList
    {
        private:
            FieldPtr _field;
            std::size_t _k;
            std::vector<ProjPoint> _points;

        public:
            PointList(FieldPtr field, std::size_t k);

            auto field() const -> const Field & { return *_field; }
            auto dimension() const -> std::size_t { return _k; }
            auto size() const -> std::size_t { return _points.size(); }
            auto operator[] (std::size_t i) const -> const ProjPoint & { return _points[i]; }
            auto begin() const { return _points.begin(); }
            auto end() const { return _points.end(); }

            /// Position of the class of v in the canonical order; nullopt for the zero vector.
            auto index_of(const std::vector<Element> & v) const -> std::optional<std::size_t>;

            /// The k x n matrix whose columns are the points, in order.
            auto as_matrix() const -> Matrix;
    };

    auto enumerate_points(FieldPtr field, std::size_t k) -> PointList;

    /// x^t B y
    auto pairing(const ProjPoint & x, const ProjPoint & y, const Matrix & b) -> Element;

    /// Number of points x with x^t B x = 0.
    auto count_absolute(const PointList & points, const Matrix & b) -> std::size_t;
}

#endif
