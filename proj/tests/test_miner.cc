#include <minrank/blowup.hh>
#include <minrank/miner.hh>

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

using namespace minrank;

namespace
{
    auto gf(unsigned q) -> FieldPtr
    {
        return std::make_shared<const Field>(Field::from_order(q));
    }

    // same multiset of isomorphism classes
    auto same_classes(std::vector<SimpleGraph> a, const std::vector<SimpleGraph> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (auto & g : b) {
            auto it = std::find_if(a.begin(), a.end(), [&] (auto & h) { return are_isomorphic(g, h) == IsomorphismResult::isomorphic; });
            if (it == a.end())
                return false;
            a.erase(it);
        }
        return true;
    }

    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("minrank_test_" + name + "_" + std::to_string(::getpid()))).string();
    }
}

TEST_CASE("enumeration counts")
{
    std::vector<std::size_t> want{ 1, 1, 2, 4, 11, 34, 156, 1044 };
    auto all = enumerate_graphs_upto(7);
    REQUIRE(all.size() == 8);
    for (std::size_t n = 0 ; n <= 7 ; ++n)
        CHECK(all[n].size() == want[n]);
    CHECK_THROWS_AS(enumerate_graphs(8), std::invalid_argument);

    auto five = enumerate_graphs(5);
    for (std::size_t i = 0 ; i < five.size() ; ++i) {
        CHECK(five[i].size() == 5);
        for (std::size_t j = i + 1 ; j < five.size() ; ++j)
            REQUIRE(are_isomorphic(five[i], five[j]) == IsomorphismResult::not_isomorphic);
    }
}

TEST_CASE("forbidden subgraphs for rank one")
{
    auto run = mine(gf(2), 1, 5);
    CHECK(run.complete);
    CHECK(same_classes(run.found, { named::path(3), SimpleGraph(4, { { 0, 1 }, { 2, 3 } }) }));

    // the same over GF(3): rank one does not depend on the field
    CHECK(same_classes(mine(gf(3), 1, 5).found, run.found));
}

TEST_CASE("found graphs are minimal non-members")
{
    auto f2 = gf(2);
    MinRankSolver solver(f2);
    auto run = mine(f2, 2, 6);
    REQUIRE(run.complete);
    CHECK(run.stats.examined == 1 + 2 + 4 + 11 + 34 + 156);
    CHECK(run.stats.oracle_verified == run.found.size());
    bool fullhouse = false;
    for (auto & g : run.found) {
        CHECK(! solver.member(g, 2));
        for (std::size_t v = 0 ; v < g.size() ; ++v)
            CHECK(solver.member(g.without_vertex(v), 2));
        fullhouse = fullhouse || are_isomorphic(g, named::fullhouse()) == IsomorphismResult::isomorphic;
    }
    CHECK(fullhouse);
}

TEST_CASE("parallel runs match serial runs")
{
    auto f3 = gf(3);
    MinerOptions serial, parallel;
    parallel.jobs = 4;
    auto a = mine(f3, 2, 6, serial), b = mine(f3, 2, 6, parallel);
    CHECK(a.checkpoint.found == b.checkpoint.found);
    CHECK(a.stats.examined == b.stats.examined);
}

TEST_CASE("checkpoint and resume")
{
    auto f2 = gf(2);
    auto whole = mine(f2, 2, 6);

    auto path = temp_path("ckpt");
    MinerOptions opts;
    opts.checkpoint_path = path;
    opts.budget = 50;
    opts.flush_every = 7;

    auto run = mine(f2, 2, 6, opts);
    CHECK(! run.complete);
    CHECK(run.stats.examined == 50);

    int rounds = 0;
    while (! run.complete && rounds++ < 20) {
        std::ifstream in(path);
        REQUIRE(in);
        auto ck = MinerCheckpoint::from_json(nlohmann::json::parse(in));
        CHECK(ck.q == 2);
        CHECK(ck.k == 2);
        opts.resume = ck;
        run = mine(f2, 2, 6, opts);
    }
    CHECK(run.complete);
    CHECK(same_classes(run.found, whole.found));
    std::filesystem::remove(path);

    MinerOptions wrong;
    MinerCheckpoint other = whole.checkpoint;
    other.q = 3;
    wrong.resume = other;
    CHECK_THROWS(mine(f2, 2, 6, wrong));
}

TEST_CASE("checkpoint json round trip")
{
    MinerCheckpoint c{ 4, 3, 6, 17, { "Bw", "C~" } };
    auto back = MinerCheckpoint::from_json(c.to_json());
    CHECK(back.q == 4);
    CHECK(back.k == 3);
    CHECK(back.n == 6);
    CHECK(back.counter == 17);
    CHECK(back.found == c.found);
    CHECK(c.to_json().contains("found"));
}

TEST_CASE("stream mode")
{
    auto f2 = gf(2);
    std::vector<SimpleGraph> graphs;
    for (auto & order : enumerate_graphs_upto(5))
        for (auto & g : order)
            graphs.push_back(g);
    auto stream = mine_stream(f2, 1, graphs);
    CHECK(stream.complete);
    CHECK(same_classes(stream.found, mine(f2, 1, 5).found));

    // repeats in the stream are reported once
    auto dup = mine_stream(f2, 1, { named::path(3), relabel(named::path(3), { 2, 0, 1 }), named::complete(4) });
    CHECK(dup.stats.examined == 3);
    CHECK(same_classes(dup.found, { named::path(3) }));
}

TEST_CASE("closed form for rank two over GF(2)")
{
    CHECK(check_f2r2_form(named::complete(5)));
    CHECK(check_f2r2_form(SimpleGraph(3)));
    CHECK(check_f2r2_form(named::path(3)));
    CHECK(! check_f2r2_form(named::fullhouse()));
    CHECK(! check_f2r2_form(named::path(4)));
    CHECK(check_f2r2_form(named::complete_multipartite({ 2, 2, 2 })));
    CHECK(! check_f2r2_form(named::complete_multipartite({ 2, 2, 2, 2 })));

    MinRankSolver solver(gf(2));
    for (std::size_t n = 0 ; n <= 6 ; ++n)
        for (auto & g : enumerate_graphs(n))
            REQUIRE(check_f2r2_form(g) == solver.member(g, 2).has_value());
}
