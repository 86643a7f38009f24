#include <minrank/patterns.hh>

#include <doctest.h>

#include <random>

using namespace minrank;

namespace
{
    auto gf(unsigned q) -> FieldPtr
    {
        return std::make_shared<const Field>(Field::from_order(q));
    }

    auto power(std::size_t b, std::size_t e) -> std::size_t
    {
        std::size_t r = 1;
        while (e--)
            r *= b;
        return r;
    }

    // builds the pattern graph of B directly from the points, entry by entry
    auto graph_of(const PointList & pts, const Matrix & b) -> LoopedGraph
    {
        auto & f = b.field();
        auto value = [&] (std::size_t i, std::size_t j) {
            Element s = f.zero();
            for (std::size_t r = 0 ; r < b.rows() ; ++r)
                for (std::size_t c = 0 ; c < b.cols() ; ++c)
                    s = f.add(s, f.mul(pts[i].coords[r], f.mul(b(r, c), pts[j].coords[c])));
            return s;
        };
        LoopedGraph g(pts.size());
        for (std::size_t i = 0 ; i < pts.size() ; ++i) {
            if (value(i, i).rep)
                g.set_loop(i);
            for (std::size_t j = i + 1 ; j < pts.size() ; ++j)
                if (value(i, j).rep)
                    g.add_edge(i, j);
        }
        return g;
    }

    auto random_nonsingular_symmetric(const FieldPtr & f, std::size_t k, std::mt19937_64 & rng) -> Matrix
    {
        while (true) {
            auto b = Matrix::random_symmetric(f, k, rng);
            if (rank(b) == k)
                return b;
        }
    }
}

TEST_CASE("small pattern sets")
{
    auto f2 = gf(2);
    auto p0 = generate(f2, 0);
    REQUIRE(p0.patterns.size() == 1);
    CHECK(p0.patterns[0].graph.size() == 0);

    auto p1 = generate(f2, 1);
    REQUIRE(p1.patterns.size() == 1);
    CHECK(p1.patterns[0].graph.size() == 1);
    CHECK(p1.patterns[0].graph.looped(0));

    auto p2 = generate(f2, 2);
    REQUIRE(p2.patterns.size() == 2);
    // identity: two loops and all three edges; symplectic: loopless triangle
    CHECK(p2.patterns[0].graph.loops().count() == 2);
    CHECK(p2.patterns[1].graph.loops().count() == 0);
    CHECK(p2.patterns[1].graph.simple_version().edge_count() == 3);

    CHECK(generate(gf(3), 3).patterns.size() == 1);
    CHECK(generate(gf(3), 4).patterns.size() == 2);
    CHECK(generate(gf(4), 3).patterns.size() == 1);
}

TEST_CASE("pattern graphs agree with the forms")
{
    for (unsigned q : { 2u, 3u, 4u, 5u, 7u })
        for (std::size_t k = 1 ; k <= (q <= 3 ? 4u : 3u) ; ++k) {
            auto ps = generate(gf(q), k);
            auto reps = canonical_representatives(ps.field, k);
            REQUIRE(ps.patterns.size() == reps.size());
            for (std::size_t i = 0 ; i < ps.patterns.size() ; ++i) {
                CHECK(ps.patterns[i].form == reps[i]);
                CHECK(ps.patterns[i].graph == graph_of(ps.points, ps.patterns[i].form));

                // rank certificate: U^t B U has rank exactly k
                auto m = pattern_matrix(ps, i);
                CHECK(m.rows() == ps.points.size());
                CHECK(m.is_symmetric());
                CHECK(rank(m) == k);

                // regular of degree q^{k-1}, a loop counting one
                auto & g = ps.patterns[i].graph;
                for (std::size_t v = 0 ; v < g.size() ; ++v)
                    REQUIRE(g.degree(v) == power(q, k - 1));
            }
        }
}

TEST_CASE("structural counts")
{
    for (unsigned q : { 2u, 3u, 4u, 5u, 7u, 8u, 9u })
        for (std::size_t k = 1 ; k <= 3 ; ++k) {
            auto report = verify_counts(generate(gf(q), k));
            for (auto & c : report.failures())
                FAIL_CHECK(c.name << " q=" << q << " k=" << k << " expected " << c.expected << " got " << c.actual);
            CHECK(report.ok());
        }
    for (unsigned q : { 2u, 3u, 4u, 5u }) {
        auto report = verify_counts(generate(gf(q), 4));
        CHECK(report.ok());
    }

    CHECK(expected_nonlooped_counts(2, true, 3) == std::vector<long long>{ 3 });
    CHECK(expected_nonlooped_counts(2, true, 4) == std::vector<long long>{ 7, 15 });
    CHECK(expected_nonlooped_counts(3, false, 3) == std::vector<long long>{ 4 });
}

TEST_CASE("any form gives a graph isomorphic to its representative's pattern")
{
    std::mt19937_64 rng(41);
    auto run = [&] (unsigned q, std::size_t k, int trials) {
        auto ps = generate(gf(q), k);
        for (int t = 0 ; t < trials ; ++t) {
            auto b = random_nonsingular_symmetric(ps.field, k, rng);
            auto cls = classify_invertible_symmetric(b);
            auto g = graph_of(ps.points, b);
            REQUIRE(are_isomorphic(g, ps.patterns.at(cls.representative).graph) == IsomorphismResult::isomorphic);
        }
    };
    for (std::size_t k = 1 ; k <= 4 ; ++k)
        run(2, k, 30);
    for (std::size_t k = 1 ; k <= 3 ; ++k)
        run(3, k, 30);

    // the two classes really are different graphs
    auto p24 = generate(gf(2), 4), p34 = generate(gf(3), 4);
    CHECK(are_isomorphic(p24.patterns[0].graph, p24.patterns[1].graph) == IsomorphismResult::not_isomorphic);
    CHECK(are_isomorphic(p34.patterns[0].graph, p34.patterns[1].graph) == IsomorphismResult::not_isomorphic);
}

TEST_CASE("vertex budget")
{
    CHECK_THROWS_AS(generate(gf(2), 20), BudgetExceeded);
    CHECK_THROWS_AS(generate(gf(3), 5, 100), BudgetExceeded);
    CHECK_NOTHROW(generate(gf(3), 5, 121));
}
