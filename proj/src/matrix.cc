/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/matrix.hh>

#include <algorithm>
#include <optional>
#include <sstream>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace minrank
{
    Matrix::Matrix(FieldPtr field, size_t rows, size_t cols) :
        _field(std::move(field)),
        _rows(rows),
        _cols(cols),
        _entries(rows * cols)
    {
    }

    Matrix::Matrix(FieldPtr field, std::initializer_list<std::initializer_list<unsigned>> reps) :
        Matrix(std::move(field), vector<vector<unsigned>>(reps.begin(), reps.end()))
    {
    }

    Matrix::Matrix(FieldPtr field, const vector<vector<unsigned>> & reps) :
        _field(std::move(field)),
        _rows(reps.size()),
        _cols(reps.empty() ? 0 : reps.front().size())
    {
        _entries.reserve(_rows * _cols);
        for (auto & row : reps) {
            if (row.size() != _cols)
                throw MatrixError{ "ragged matrix rows" };
            for (auto r : row)
                _entries.push_back(_field->element(r));
        }
    }

    auto Matrix::identity(FieldPtr field, size_t n) -> Matrix
    {
        Matrix result(field, n, n);
        for (size_t i = 0 ; i < n ; ++i)
            result(i, i) = field->one();
        return result;
    }

    auto Matrix::diagonal(FieldPtr field, const vector<Element> & diag) -> Matrix
    {
        Matrix result(field, diag.size(), diag.size());
        for (size_t i = 0 ; i < diag.size() ; ++i)
            result(i, i) = diag[i];
        return result;
    }

    auto Matrix::random(FieldPtr field, size_t rows, size_t cols, std::mt19937_64 & rng) -> Matrix
    {
        std::uniform_int_distribution<unsigned> dist(0, field->order() - 1);
        Matrix result(field, rows, cols);
        for (auto & e : result._entries)
            e = Element{ dist(rng) };
        return result;
    }

    auto Matrix::random_symmetric(FieldPtr field, size_t n, std::mt19937_64 & rng) -> Matrix
    {
        std::uniform_int_distribution<unsigned> dist(0, field->order() - 1);
        Matrix result(field, n, n);
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = i ; j < n ; ++j)
                result(i, j) = result(j, i) = Element{ dist(rng) };
        return result;
    }

    auto Matrix::random_invertible(FieldPtr field, size_t n, std::mt19937_64 & rng) -> Matrix
    {
        while (true) {
            auto result = random(field, n, n, rng);
            if (rank(result) == n)
                return result;
        }
    }

    auto Matrix::at(size_t i, size_t j) const -> Element
    {
        if (i >= _rows || j >= _cols)
            throw MatrixError{ "matrix index out of range" };
        return (*this)(i, j);
    }

    auto Matrix::transpose() const -> Matrix
    {
        Matrix result(_field, _cols, _rows);
        for (size_t i = 0 ; i < _rows ; ++i)
            for (size_t j = 0 ; j < _cols ; ++j)
                result(j, i) = (*this)(i, j);
        return result;
    }

    auto Matrix::operator* (const Matrix & other) const -> Matrix
    {
        if (_cols != other._rows)
            throw MatrixError{ "dimension mismatch in matrix product" };
        if (! _field->same_as(*other._field))
            throw MatrixError{ "field mismatch in matrix product" };
        auto & f = *_field;
        Matrix result(_field, _rows, other._cols);
        for (size_t i = 0 ; i < _rows ; ++i)
            for (size_t l = 0 ; l < _cols ; ++l) {
                auto a = (*this)(i, l);
                if (a.rep == 0)
                    continue;
                for (size_t j = 0 ; j < other._cols ; ++j)
                    result(i, j) = f.add(result(i, j), f.mul(a, other(l, j)));
            }
        return result;
    }

    auto Matrix::operator== (const Matrix & other) const -> bool
    {
        return _rows == other._rows && _cols == other._cols && _field->same_as(*other._field)
            && _entries == other._entries;
    }

    auto Matrix::is_symmetric() const -> bool
    {
        if (! is_square())
            return false;
        for (size_t i = 0 ; i < _rows ; ++i)
            for (size_t j = i + 1 ; j < _cols ; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    auto Matrix::has_zero_diagonal() const -> bool
    {
        for (size_t i = 0 ; i < std::min(_rows, _cols) ; ++i)
            if ((*this)(i, i).rep != 0)
                return false;
        return true;
    }

    auto Matrix::principal(const vector<size_t> & indices) const -> Matrix
    {
        Matrix result(_field, indices.size(), indices.size());
        for (size_t i = 0 ; i < indices.size() ; ++i)
            for (size_t j = 0 ; j < indices.size() ; ++j)
                result(i, j) = at(indices[i], indices[j]);
        return result;
    }

    auto Matrix::select_rows(const vector<size_t> & indices) const -> Matrix
    {
        Matrix result(_field, indices.size(), _cols);
        for (size_t i = 0 ; i < indices.size() ; ++i)
            for (size_t j = 0 ; j < _cols ; ++j)
                result(i, j) = at(indices[i], j);
        return result;
    }

    auto Matrix::column(size_t j) const -> vector<Element>
    {
        vector<Element> result;
        for (size_t i = 0 ; i < _rows ; ++i)
            result.push_back(at(i, j));
        return result;
    }

    auto Matrix::congruent(const Matrix & c) const -> Matrix
    {
        return c.transpose() * (*this) * c;
    }

    auto Matrix::to_string() const -> string
    {
        std::ostringstream s;
        for (size_t i = 0 ; i < _rows ; ++i) {
            for (size_t j = 0 ; j < _cols ; ++j)
                s << (j ? " " : "") << (*this)(i, j).rep;
            s << '\n';
        }
        return s.str();
    }

    namespace
    {
        // row echelon form in place; returns rank and the determinant factor of the swaps and pivots
        auto eliminate(Matrix & m, bool track_det) -> pair<size_t, Element>
        {
            auto & f = m.field();
            Element det = f.one();
            size_t r = 0;
            for (size_t c = 0 ; c < m.cols() && r < m.rows() ; ++c) {
                optional<size_t> pivot;
                for (size_t i = r ; i < m.rows() ; ++i)
                    if (m(i, c).rep != 0) {
                        pivot = i;
                        break;
                    }
                if (! pivot) {
                    if (track_det)
                        det = f.zero();
                    continue;
                }
                if (*pivot != r) {
                    for (size_t j = 0 ; j < m.cols() ; ++j)
                        std::swap(m(r, j), m(*pivot, j));
                    if (track_det)
                        det = f.neg(det);
                }
                auto p = m(r, c);
                if (track_det)
                    det = f.mul(det, p);
                auto p_inv = f.inv(p);
                for (size_t i = r + 1 ; i < m.rows() ; ++i) {
                    if (m(i, c).rep == 0)
                        continue;
                    auto factor = f.mul(m(i, c), p_inv);
                    for (size_t j = c ; j < m.cols() ; ++j)
                        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
                }
                ++r;
            }
            if (track_det && r < m.rows())
                det = f.zero();
            return { r, det };
        }
    }

    auto rank(const Matrix & a) -> size_t
    {
        auto m = a;
        return eliminate(m, false).first;
    }

    auto determinant(const Matrix & a) -> Element
    {
        if (! a.is_square())
            throw MatrixError{ "determinant of a non-square matrix" };
        if (a.rows() == 0)
            return a.field().one();
        auto m = a;
        return eliminate(m, true).second;
    }

    auto solve(const Matrix & a, const Matrix & b) -> Matrix
    {
        if (! a.is_square() || a.rows() != b.rows())
            throw MatrixError{ "dimension mismatch in solve" };
        auto & f = a.field();
        size_t n = a.rows(), m = b.cols();
        Matrix aug(a.field_ptr(), n, n + m);
        for (size_t i = 0 ; i < n ; ++i) {
            for (size_t j = 0 ; j < n ; ++j)
                aug(i, j) = a(i, j);
            for (size_t j = 0 ; j < m ; ++j)
                aug(i, n + j) = b(i, j);
        }

        for (size_t c = 0 ; c < n ; ++c) {
            optional<size_t> pivot;
            for (size_t i = c ; i < n ; ++i)
                if (aug(i, c).rep != 0) {
                    pivot = i;
                    break;
                }
            if (! pivot)
                throw MatrixError{ "singular matrix in solve" };
            for (size_t j = 0 ; j < n + m ; ++j)
                std::swap(aug(c, j), aug(*pivot, j));
            auto p_inv = f.inv(aug(c, c));
            for (size_t j = 0 ; j < n + m ; ++j)
                aug(c, j) = f.mul(aug(c, j), p_inv);
            for (size_t i = 0 ; i < n ; ++i) {
                if (i == c || aug(i, c).rep == 0)
                    continue;
                auto factor = aug(i, c);
                for (size_t j = 0 ; j < n + m ; ++j)
                    aug(i, j) = f.sub(aug(i, j), f.mul(factor, aug(c, j)));
            }
        }

        Matrix result(a.field_ptr(), n, m);
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = 0 ; j < m ; ++j)
                result(i, j) = aug(i, n + j);
        return result;
    }

    auto inverse(const Matrix & a) -> Matrix
    {
        return solve(a, Matrix::identity(a.field_ptr(), a.rows()));
    }

    namespace
    {
        auto require_symmetric(const Matrix & b, const char * what) -> void
        {
            if (! b.is_symmetric())
                throw MatrixError{ string{ what } + " requires a symmetric matrix" };
        }

        /// Tracks D = C^t B C while applying elementary congruences.
        struct CongruenceWork
        {
            const Field & f;
            Matrix d, c;

            auto swap_indices(size_t i, size_t j) -> void
            {
                if (i == j)
                    return;
                for (size_t l = 0 ; l < d.rows() ; ++l)
                    std::swap(d(l, i), d(l, j));
                for (size_t l = 0 ; l < d.cols() ; ++l)
                    std::swap(d(i, l), d(j, l));
                for (size_t l = 0 ; l < c.rows() ; ++l)
                    std::swap(c(l, i), c(l, j));
            }

            // index dst += factor * index src, on both sides
            auto add_multiple(size_t src, size_t dst, Element factor) -> void
            {
                if (factor.rep == 0)
                    return;
                for (size_t l = 0 ; l < d.rows() ; ++l)
                    d(l, dst) = f.add(d(l, dst), f.mul(factor, d(l, src)));
                for (size_t l = 0 ; l < d.cols() ; ++l)
                    d(dst, l) = f.add(d(dst, l), f.mul(factor, d(src, l)));
                for (size_t l = 0 ; l < c.rows() ; ++l)
                    c(l, dst) = f.add(c(l, dst), f.mul(factor, c(l, src)));
            }

            // apply an arbitrary invertible transform T on the listed indices
            auto apply_local(const vector<size_t> & idx, const vector<vector<Element>> & t) -> void
            {
                auto n = d.rows();
                Matrix e = Matrix::identity(d.field_ptr(), n);
                for (size_t a = 0 ; a < idx.size() ; ++a)
                    for (size_t b = 0 ; b < idx.size() ; ++b)
                        e(idx[a], idx[b]) = t[a][b];
                d = d.congruent(e);
                c = c * e;
            }

            auto scale(size_t i, Element s) -> void
            {
                for (size_t l = 0 ; l < d.rows() ; ++l)
                    d(l, i) = f.mul(d(l, i), s);
                for (size_t l = 0 ; l < d.cols() ; ++l)
                    d(i, l) = f.mul(d(i, l), s);
                for (size_t l = 0 ; l < c.rows() ; ++l)
                    c(l, i) = f.mul(c(l, i), s);
            }

            auto permute(const vector<size_t> & order) -> void
            {
                auto n = order.size();
                Matrix nd(d.field_ptr(), n, n), nc(c.field_ptr(), c.rows(), n);
                for (size_t a = 0 ; a < n ; ++a) {
                    for (size_t b = 0 ; b < n ; ++b)
                        nd(a, b) = d(order[a], order[b]);
                    for (size_t l = 0 ; l < c.rows() ; ++l)
                        nc(l, a) = c(l, order[a]);
                }
                d = std::move(nd);
                c = std::move(nc);
            }
        };
    }

    auto congruence_diagonalize(const Matrix & b) -> Diagonalization
    {
        require_symmetric(b, "congruence_diagonalize");
        auto & f = b.field();
        auto n = b.rows();
        CongruenceWork w{ f, b, Matrix::identity(b.field_ptr(), n) };

        enum class Block { single, hyperbolic };
        vector<pair<size_t, Block>> blocks;
        size_t diagonal_pivots = 0, hyperbolic_pivots = 0;

        size_t t = 0;
        while (t < n) {
            optional<size_t> diag;
            for (size_t i = t ; i < n ; ++i)
                if (w.d(i, i).rep != 0) {
                    diag = i;
                    break;
                }

            if (diag) {
                w.swap_indices(t, *diag);
                auto a_inv = f.inv(w.d(t, t));
                for (size_t l = t + 1 ; l < n ; ++l)
                    w.add_multiple(t, l, f.neg(f.mul(w.d(t, l), a_inv)));
                blocks.emplace_back(t, Block::single);
                ++diagonal_pivots;
                ++t;
                continue;
            }

            optional<pair<size_t, size_t>> off;
            for (size_t i = t ; i < n && ! off ; ++i)
                for (size_t j = i + 1 ; j < n ; ++j)
                    if (w.d(i, j).rep != 0) {
                        off = pair{ i, j };
                        break;
                    }
            if (! off)
                break;

            w.swap_indices(t, off->first);
            w.swap_indices(t + 1, off->second);
            auto a = w.d(t, t + 1);
            auto a_inv = f.inv(a);
            for (size_t l = t + 2 ; l < n ; ++l) {
                auto r0 = f.mul(w.d(t + 1, l), a_inv);
                auto r1 = f.mul(w.d(t, l), a_inv);
                w.add_multiple(t, l, f.neg(r0));
                w.add_multiple(t + 1, l, f.neg(r1));
            }
            ++hyperbolic_pivots;

            if (f.is_even())
                blocks.emplace_back(t, Block::hyperbolic);
            else {
                // [[1,1],[-1,1]] aH [[1,-1],[1,1]] = diag(2a, -2a)
                w.apply_local({ t, t + 1 }, { { f.one(), f.neg(f.one()) }, { f.one(), f.one() } });
                blocks.emplace_back(t, Block::single);
                blocks.emplace_back(t + 1, Block::single);
            }
            t += 2;
        }

        // singles first, then hyperbolic blocks, then the zero tail
        vector<size_t> order;
        for (auto & [start, kind] : blocks)
            if (kind == Block::single)
                order.push_back(start);
        for (auto & [start, kind] : blocks)
            if (kind == Block::hyperbolic) {
                order.push_back(start);
                order.push_back(start + 1);
            }
        for (size_t i = t ; i < n ; ++i)
            order.push_back(i);
        w.permute(order);

        return Diagonalization{ std::move(w.c), std::move(w.d), diagonal_pivots, hyperbolic_pivots };
    }

    auto to_string(CongruenceTag tag) -> string
    {
        switch (tag) {
            case CongruenceTag::identity:       return "identity";
            case CongruenceTag::symplectic:     return "symplectic";
            case CongruenceTag::square_det:     return "square_det";
            case CongruenceTag::nonsquare_det:  return "nonsquare_det";
        }
        throw std::logic_error{ "unknown congruence tag" };
    }

    namespace
    {
        auto require_invertible_symmetric(const Matrix & b, const char * what) -> void
        {
            require_symmetric(b, what);
            if (b.rows() == 0)
                throw MatrixError{ string{ what } + " requires a matrix of positive order" };
            if (rank(b) != b.rows())
                throw MatrixError{ string{ what } + " requires an invertible matrix" };
        }
    }

    auto classify_invertible_symmetric(const Matrix & b) -> CongruenceClass
    {
        require_invertible_symmetric(b, "classify_invertible_symmetric");
        auto & f = b.field();
        auto k = b.rows();

        if (f.is_even()) {
            auto diag = congruence_diagonalize(b);
            bool symplectic = 0 == diag.diagonal_pivots;
            if (symplectic != b.has_zero_diagonal())
                throw std::logic_error{ "pivot criterion and zero-diagonal criterion disagree" };
            auto tag = symplectic ? CongruenceTag::symplectic : CongruenceTag::identity;
            return CongruenceClass{ k, tag, tag, symplectic ? 1u : 0u };
        }

        auto tag = f.is_square(determinant(b)) ? CongruenceTag::square_det : CongruenceTag::nonsquare_det;
        if (k % 2 == 1)
            return CongruenceClass{ k, tag, CongruenceTag::identity, 0 };
        return CongruenceClass{ k, tag, tag, tag == CongruenceTag::square_det ? 0u : 1u };
    }

    auto canonical_representatives(const FieldPtr & field, size_t k) -> vector<Matrix>
    {
        if (k < 1)
            throw MatrixError{ "canonical_representatives requires k >= 1" };
        vector<Matrix> result;
        result.push_back(Matrix::identity(field, k));
        if (k % 2 == 1)
            return result;

        if (field->is_even()) {
            Matrix h(field, k, k);
            for (size_t i = 0 ; i < k ; i += 2)
                h(i, i + 1) = h(i + 1, i) = field->one();
            result.push_back(std::move(h));
        }
        else {
            auto m = Matrix::identity(field, k);
            m(k - 1, k - 1) = field->find_nonsquare();
            result.push_back(std::move(m));
        }
        return result;
    }

    auto congruence_normalize(const Matrix & b) -> Normalization
    {
        require_invertible_symmetric(b, "congruence_normalize");
        auto & f = b.field();
        auto k = b.rows();
        auto diag = congruence_diagonalize(b);
        CongruenceWork w{ f, diag.reduced, diag.transform };

        if (f.is_even()) {
            auto singles = diag.diagonal_pivots;
            for (size_t i = 0 ; i < singles ; ++i)
                w.scale(i, f.inv(f.sqrt(w.d(i, i))));
            for (size_t i = singles ; i < k ; i += 2) {
                auto s = f.inv(f.sqrt(w.d(i, i + 1)));
                w.scale(i, s);
                w.scale(i + 1, s);
            }
            // diag(1, H) is congruent to I_3 in characteristic 2
            if (singles > 0) {
                auto o = f.one(), z = f.zero();
                for (size_t i = singles ; i < k ; i += 2)
                    w.apply_local({ 0, i, i + 1 }, { { o, o, o }, { o, z, o }, { z, o, o } });
            }
        }
        else {
            auto nu = f.find_nonsquare();
            vector<size_t> squares, nonsquares;
            for (size_t i = 0 ; i < k ; ++i) {
                auto a = w.d(i, i);
                if (f.is_square(a)) {
                    w.scale(i, f.inv(f.sqrt(a)));
                    squares.push_back(i);
                }
                else {
                    w.scale(i, f.inv(f.sqrt(f.div(a, nu))));
                    nonsquares.push_back(i);
                }
            }
            auto order = squares;
            order.insert(order.end(), nonsquares.begin(), nonsquares.end());
            w.permute(order);

            // R^t (nu I_2) R = I_2 for R = nu^{-1} [[c, d], [-d, c]] with c^2 + d^2 = nu
            auto [c, d] = f.sum_of_two_squares(nu);
            auto nu_inv = f.inv(nu);
            vector<vector<Element>> r{ { f.mul(nu_inv, c), f.mul(nu_inv, d) },
                { f.neg(f.mul(nu_inv, d)), f.mul(nu_inv, c) } };
            for (size_t i = squares.size() ; i + 1 < k ; i += 2)
                w.apply_local({ i, i + 1 }, r);
        }

        auto expected = classify_invertible_symmetric(b);
        auto target = Matrix::identity(b.field_ptr(), k);
        if (expected.tag == CongruenceTag::symplectic)
            target = canonical_representatives(b.field_ptr(), k).back();
        else if (expected.tag == CongruenceTag::nonsquare_det)
            target(k - 1, k - 1) = f.find_nonsquare();
        auto normal_form = b.congruent(w.c);
        if (normal_form != target)
            throw std::logic_error{ "congruence normalisation did not reach the class representative" };
        return Normalization{ std::move(w.c), std::move(normal_form) };
    }

    auto rank_decomposition(const Matrix & a) -> RankDecomposition
    {
        require_symmetric(a, "rank_decomposition");
        auto & f = a.field();
        auto n = a.rows();
        auto s = a;
        vector<bool> used(n, false);
        vector<size_t> pivots;

        while (true) {
            optional<size_t> diag;
            for (size_t i = 0 ; i < n ; ++i)
                if (! used[i] && s(i, i).rep != 0) {
                    diag = i;
                    break;
                }

            if (diag) {
                auto i = *diag;
                auto p_inv = f.inv(s(i, i));
                used[i] = true;
                pivots.push_back(i);
                for (size_t l = 0 ; l < n ; ++l) {
                    if (used[l] || s(l, i).rep == 0)
                        continue;
                    auto factor = f.mul(s(l, i), p_inv);
                    for (size_t m = 0 ; m < n ; ++m)
                        if (! used[m])
                            s(l, m) = f.sub(s(l, m), f.mul(factor, s(i, m)));
                }
                continue;
            }

            optional<pair<size_t, size_t>> off;
            for (size_t i = 0 ; i < n && ! off ; ++i) {
                if (used[i])
                    continue;
                for (size_t j = i + 1 ; j < n ; ++j)
                    if (! used[j] && s(i, j).rep != 0) {
                        off = pair{ i, j };
                        break;
                    }
            }
            if (! off)
                break;

            auto [i, j] = *off;
            auto a_inv = f.inv(s(i, j));
            used[i] = used[j] = true;
            pivots.push_back(i);
            pivots.push_back(j);
            // Schur complement against [[0,a],[a,0]], whose inverse is a^{-1} H
            auto snapshot = s;
            for (size_t l = 0 ; l < n ; ++l) {
                if (used[l])
                    continue;
                for (size_t m = 0 ; m < n ; ++m) {
                    if (used[m])
                        continue;
                    auto cross = f.add(f.mul(snapshot(l, i), snapshot(j, m)), f.mul(snapshot(l, j), snapshot(i, m)));
                    s(l, m) = f.sub(s(l, m), f.mul(a_inv, cross));
                }
            }
        }

        std::sort(pivots.begin(), pivots.end());
        auto inner = a.principal(pivots);
        auto outer = pivots.empty() ? Matrix(a.field_ptr(), 0, n) : solve(inner, a.select_rows(pivots));
        return RankDecomposition{ std::move(pivots), std::move(inner), std::move(outer) };
    }
}
