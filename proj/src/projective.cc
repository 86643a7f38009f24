/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/projective.hh>

#include <limits>

using std::optional;
using std::size_t;
using std::vector;

namespace minrank
{
    auto normalize_point(const Field & field, vector<Element> v) -> ProjPoint
    {
        for (auto i = v.size() ; i > 0 ; --i)
            if (v[i - 1].rep != 0) {
                auto s = field.inv(v[i - 1]);
                for (auto & x : v)
                    x = field.mul(x, s);
                return ProjPoint{ std::move(v) };
            }
        throw MatrixError{ "the zero vector is not a projective point" };
    }

    auto point_count(unsigned q, size_t k) -> size_t
    {
        // 1 + q + ... + q^{k-1}, saturating
        constexpr auto limit = std::numeric_limits<size_t>::max();
        size_t total = 0, power = 1;
        for (size_t i = 0 ; i < k ; ++i) {
            if (total > limit - power)
                return limit;
            total += power;
            if (i + 1 < k) {
                if (power > limit / q)
                    return limit;
                power *= q;
            }
        }
        return total;
    }

    PointList::PointList(FieldPtr field, size_t k) :
        _field(std::move(field)),
        _k(k)
    {
        auto q = _field->order();
        _points.reserve(point_count(q, k));
        for (size_t d = k ; d >= 1 ; --d) {
            // d-1 free coordinates, little-endian counter
            vector<Element> coords(k, _field->zero());
            coords[d - 1] = _field->one();
            while (true) {
                _points.push_back(ProjPoint{ coords });
                size_t pos = 0;
                while (pos + 1 < d) {
                    if (coords[pos].rep + 1 < q) {
                        coords[pos] = Element{ coords[pos].rep + 1 };
                        break;
                    }
                    coords[pos] = _field->zero();
                    ++pos;
                }
                if (pos + 1 >= d)
                    break;
            }
        }
    }

    auto PointList::index_of(const vector<Element> & v) const -> optional<size_t>
    {
        if (v.size() != _k)
            throw MatrixError{ "point has the wrong dimension" };
        bool zero = true;
        for (auto & x : v)
            zero = zero && x.rep == 0;
        if (zero)
            return std::nullopt;

        auto p = normalize_point(*_field, v);
        auto q = _field->order();
        size_t d = _k;
        while (p.coords[d - 1].rep == 0)
            --d;
        // points with a later last-nonzero position come first
        size_t index = 0, power = 1;
        for (size_t i = 0 ; i < _k ; ++i) {
            if (i >= d)
                index += power;
            power *= q;
        }
        size_t counter = 0, scale = 1;
        for (size_t i = 0 ; i + 1 < d ; ++i) {
            counter += p.coords[i].rep * scale;
            scale *= q;
        }
        return index + counter;
    }

    auto PointList::as_matrix() const -> Matrix
    {
        Matrix result(_field, _k, _points.size());
        for (size_t j = 0 ; j < _points.size() ; ++j)
            for (size_t i = 0 ; i < _k ; ++i)
                result(i, j) = _points[j].coords[i];
        return result;
    }

    auto enumerate_points(FieldPtr field, size_t k) -> PointList
    {
        return PointList{ std::move(field), k };
    }

    auto pairing(const ProjPoint & x, const ProjPoint & y, const Matrix & b) -> Element
    {
        auto k = b.rows();
        if (! b.is_square() || x.coords.size() != k || y.coords.size() != k)
            throw MatrixError{ "dimension mismatch in pairing" };
        auto & f = b.field();
        Element result = f.zero();
        for (size_t i = 0 ; i < k ; ++i) {
            if (x.coords[i].rep == 0)
                continue;
            Element row = f.zero();
            for (size_t j = 0 ; j < k ; ++j)
                row = f.add(row, f.mul(b(i, j), y.coords[j]));
            result = f.add(result, f.mul(x.coords[i], row));
        }
        return result;
    }

    auto count_absolute(const PointList & points, const Matrix & b) -> size_t
    {
        size_t count = 0;
        for (auto & x : points)
            if (pairing(x, x, b).rep == 0)
                ++count;
        return count;
    }
}
