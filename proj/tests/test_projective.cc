#include <minrank/projective.hh>
#include <minrank/reference.hh>

#include <doctest.h>

#include <random>
#include <set>

using namespace minrank;

namespace
{
    auto gf(unsigned q) -> FieldPtr
    {
        return std::make_shared<const Field>(Field::from_order(q));
    }

    auto reps(const ProjPoint & p) -> std::vector<unsigned>
    {
        std::vector<unsigned> r;
        for (auto & c : p.coords)
            r.push_back(c.rep);
        return r;
    }

    auto columns(const std::vector<std::vector<unsigned>> & rows) -> std::vector<std::vector<unsigned>>
    {
        std::vector<std::vector<unsigned>> cols(rows.front().size(), std::vector<unsigned>(rows.size()));
        for (size_t r = 0 ; r < rows.size() ; ++r)
            for (size_t c = 0 ; c < rows[r].size() ; ++c)
                cols[c][r] = rows[r][c];
        return cols;
    }
}

TEST_CASE("point counts")
{
    for (unsigned q : { 2u, 3u, 4u, 5u, 7u, 9u })
        for (size_t k = 1 ; k <= 5 ; ++k) {
            size_t want = 0, pw = 1;
            for (size_t i = 0 ; i < k ; ++i, pw *= q)
                want += pw;
            CHECK(point_count(q, k) == want);
            CHECK(enumerate_points(gf(q), k).size() == want);
        }
    CHECK(point_count(2, 0) == 0);
}

TEST_CASE("canonical order reproduces the printed point lists")
{
    auto p23 = enumerate_points(gf(2), 3);
    std::vector<std::vector<unsigned>> want{ { 0, 0, 1 }, { 1, 0, 1 }, { 0, 1, 1 }, { 1, 1, 1 }, { 0, 1, 0 }, { 1, 1, 0 }, { 1, 0, 0 } };
    for (size_t i = 0 ; i < want.size() ; ++i)
        CHECK(reps(p23[i]) == want[i]);

    for (auto & printed : reference::printed_patterns()) {
        auto pts = enumerate_points(gf(printed.q), printed.k);
        auto cols = columns(printed.points);
        REQUIRE(cols.size() == pts.size());
        for (size_t i = 0 ; i < cols.size() ; ++i)
            CHECK(reps(pts[i]) == cols[i]);
    }

    auto p21 = enumerate_points(gf(2), 1);
    REQUIRE(p21.size() == 1);
    CHECK(reps(p21[0]) == std::vector<unsigned>{ 1 });
}

TEST_CASE("points are canonical and pairwise independent")
{
    for (unsigned q : { 2u, 3u, 4u, 5u })
        for (size_t k = 1 ; k <= 4 ; ++k) {
            auto f = gf(q);
            auto pts = enumerate_points(f, k);
            std::set<std::vector<unsigned>> seen;
            for (auto & p : pts) {
                size_t last = k;
                while (last-- > 0 && p.coords[last].rep == 0)
                    ;
                REQUIRE(last < k);
                CHECK(p.coords[last] == f->one());
                seen.insert(reps(p));
            }
            CHECK(seen.size() == pts.size());

            for (size_t i = 0 ; i < pts.size() ; ++i)
                for (size_t j = i + 1 ; j < pts.size() ; ++j)
                    for (auto c : f->elements()) {
                        bool multiple = true;
                        for (size_t r = 0 ; r < k && multiple ; ++r)
                            multiple = pts[i].coords[r] == f->mul(c, pts[j].coords[r]);
                        REQUIRE(! multiple);
                    }
        }
}

TEST_CASE("index lookup and normalisation")
{
    std::mt19937_64 rng(21);
    for (unsigned q : { 2u, 3u, 4u, 5u, 9u })
        for (size_t k = 1 ; k <= 4 ; ++k) {
            auto f = gf(q);
            auto pts = enumerate_points(f, k);
            for (size_t i = 0 ; i < pts.size() ; ++i) {
                auto scaled = pts[i].coords;
                Element c{ static_cast<unsigned>(1 + rng() % (q - 1)) };
                for (auto & x : scaled)
                    x = f->mul(c, x);
                CHECK(pts.index_of(pts[i].coords) == i);
                CHECK(pts.index_of(scaled) == i);
                CHECK(normalize_point(*f, scaled) == pts[i]);
            }
            CHECK(pts.index_of(std::vector<Element>(k, f->zero())) == std::nullopt);
            auto u = pts.as_matrix();
            CHECK(u.rows() == k);
            CHECK(u.cols() == pts.size());
        }
}

TEST_CASE("pairing")
{
    auto f2 = gf(2);
    auto i3 = Matrix::identity(f2, 3);
    ProjPoint e1{ { Element{ 1 }, Element{ 0 }, Element{ 0 } } };
    ProjPoint z{ { Element{ 0 }, Element{ 0 }, Element{ 1 } } }, all{ { Element{ 1 }, Element{ 1 }, Element{ 1 } } };
    CHECK(pairing(e1, e1, i3).rep == 1);
    CHECK(pairing(z, all, i3).rep == 1);

    Matrix h(f2, { { 0, 1 }, { 1, 0 } });
    ProjPoint x{ { Element{ 1 }, Element{ 0 } } }, y{ { Element{ 0 }, Element{ 1 } } };
    CHECK(pairing(x, y, h).rep == 1);
    CHECK(pairing(x, x, h).rep == 0);
    CHECK_THROWS_AS(pairing(x, e1, h), MatrixError);

    std::mt19937_64 rng(22);
    for (unsigned q : { 3u, 4u, 7u }) {
        auto f = gf(q);
        auto pts = enumerate_points(f, 3);
        auto b = Matrix::random_symmetric(f, 3, rng);
        for (auto & p : pts)
            for (auto & r : pts)
                REQUIRE(pairing(p, r, b) == pairing(r, p, b));
    }
}

TEST_CASE("absolute points")
{
    auto f2 = gf(2), f3 = gf(3);
    CHECK(count_absolute(enumerate_points(f2, 3), Matrix::identity(f2, 3)) == 3);
    CHECK(count_absolute(enumerate_points(f3, 3), Matrix::identity(f3, 3)) == 4);
    Matrix hh(f2, { { 0, 1, 0, 0 }, { 1, 0, 0, 0 }, { 0, 0, 0, 1 }, { 0, 0, 1, 0 } });
    CHECK(count_absolute(enumerate_points(f2, 4), hh) == 15);

    // odd q, k = 2m: the two classes give the two counts, in some order
    for (unsigned q : { 3u, 5u, 7u, 9u })
        for (size_t m : { 1u, 2u }) {
            auto f = gf(q);
            auto pts = enumerate_points(f, 2 * m);
            std::multiset<long long> got;
            for (auto & b : canonical_representatives(f, 2 * m))
                got.insert(count_absolute(pts, b));
            long long qq = q, qm = 1, qm1 = 1;
            for (size_t i = 0 ; i < m ; ++i)
                qm *= qq;
            qm1 = qm / qq;
            std::multiset<long long> want{ (qm - 1) * (qm1 + 1) / (qq - 1), (qm + 1) * (qm1 - 1) / (qq - 1) };
            CHECK(got == want);
        }
}
