/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/cli.hh>
#include <minrank/blowup.hh>
#include <minrank/io.hh>
#include <minrank/matrix.hh>
#include <minrank/miner.hh>
#include <minrank/oracle.hh>
#include <minrank/patterns.hh>
#include <minrank/reference.hh>

#include <functional>
#include <map>
#include <optional>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace minrank
{
    namespace
    {
        using Failure = optional<string>;

        struct Case
        {
            string name;
            std::function<Failure ()> run;
        };

        auto gf(unsigned q) -> FieldPtr
        {
            return std::make_shared<const Field>(Field::from_order(q));
        }

        template <typename T_, typename U_>
        auto expect(const T_ & got, const U_ & want, const string & what) -> Failure
        {
            if (got == want)
                return std::nullopt;
            std::ostringstream s;
            s << what << ": got " << got << ", expected " << want;
            return s.str();
        }

        auto first_failure(std::initializer_list<Failure> fs) -> Failure
        {
            for (auto & f : fs)
                if (f)
                    return f;
            return std::nullopt;
        }

        auto h(const FieldPtr & f) -> Matrix { return Matrix(f, { { 0, 1 }, { 1, 0 } }); }

        // the example path v1 - v2 - v3 - v4 with v2, v3, v4 looped
        auto example_path() -> LoopedGraph
        {
            LoopedGraph g(4);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            for (int v : { 1, 2, 3 })
                g.set_loop(v);
            return g;
        }

        auto graph_of(const Matrix & m) -> SimpleGraph
        {
            SimpleGraph g(m.rows());
            for (size_t i = 0 ; i < m.rows() ; ++i)
                for (size_t j = i + 1 ; j < m.cols() ; ++j)
                    if (m(i, j).rep != 0)
                        g.add_edge(i, j);
            return g;
        }

        auto cases() -> vector<Case>
        {
            vector<Case> result;
            auto add = [&] (string name, std::function<Failure ()> f) { result.push_back({ std::move(name), std::move(f) }); };

            add("every element of GF(2) is a square", [] {
                auto f = gf(2);
                for (auto a : f->elements())
                    if (! f->is_square(a))
                        return Failure{ std::to_string(a.rep) + " is not a square" };
                return Failure{};
            });

            add("fullhouse over GF(2) with unit diagonal has rank 3", [] {
                auto f = gf(2);
                Matrix a(f, { { 1, 1, 1, 0, 0 }, { 1, 1, 1, 1, 1 }, { 1, 1, 1, 1, 1 }, { 0, 1, 1, 1, 1 }, { 0, 1, 1, 1, 1 } });
                return first_failure({ expect(rank(a), 3u, "rank"),
                        expect(graph_of(a) == named::fullhouse(), true, "pattern is fullhouse") });
            });

            add("fullhouse has a rank 2 matrix over GF(3) (a = b = 1)", [] {
                auto f = gf(3);
                Matrix a(f, { { 1, 1, 1, 0, 0 }, { 1, 2, 2, 1, 1 }, { 1, 2, 2, 1, 1 }, { 0, 1, 1, 1, 1 }, { 0, 1, 1, 1, 1 } });
                return first_failure({ expect(rank(a), 2u, "rank"),
                        expect(graph_of(a) == named::fullhouse(), true, "pattern is fullhouse") });
            });

            add("H over GF(3) diagonalises to diag(2, 1)", [] {
                auto f = gf(3);
                auto d = congruence_diagonalize(h(f));
                return expect(d.reduced == Matrix(f, { { 2, 0 }, { 0, 1 } }), true, "reduced form");
            });

            add("H over GF(2) admits no diagonal pivot", [] {
                auto f = gf(2);
                auto d = congruence_diagonalize(h(f));
                return first_failure({ expect(d.reduced == h(f), true, "reduced form is H"),
                        expect(d.diagonal_pivots, 0u, "diagonal pivots") });
            });

            add("congruence tags of small forms", [] {
                auto f2 = gf(2), f3 = gf(3);
                return first_failure({
                        expect(to_string(classify_invertible_symmetric(h(f2)).tag), "symplectic", "H over GF(2)"),
                        expect(to_string(classify_invertible_symmetric(Matrix(f2, { { 1, 1 }, { 1, 0 } })).tag), "identity", "[[1,1],[1,0]] over GF(2)"),
                        expect(to_string(classify_invertible_symmetric(Matrix(f3, { { 1, 0 }, { 0, 2 } })).tag), "nonsquare_det", "diag(1,2) over GF(3)"),
                        expect(to_string(classify_invertible_symmetric(Matrix(f3, { { 1, 0, 0 }, { 0, 1, 0 }, { 0, 0, 2 } })).projective_tag),
                            "identity", "diag(1,1,2) over GF(3), projectively") });
            });

            add("representatives for (2,3), (2,4), (3,2)", [] {
                auto f2 = gf(2), f3 = gf(3);
                auto r23 = canonical_representatives(f2, 3), r24 = canonical_representatives(f2, 4), r32 = canonical_representatives(f3, 2);
                return first_failure({
                        expect(r23.size() == 1 && r23[0] == Matrix::identity(f2, 3), true, "q=2, k=3 is {I_3}"),
                        expect(r24.size() == 2 && r24[0] == Matrix::identity(f2, 4)
                                && r24[1] == Matrix(f2, { { 0, 1, 0, 0 }, { 1, 0, 0, 0 }, { 0, 0, 0, 1 }, { 0, 0, 1, 0 } }),
                            true, "q=2, k=4 is {I_4, diag(H,H)}"),
                        expect(r32.size() == 2 && r32[0] == Matrix::identity(f3, 2) && r32[1] == Matrix(f3, { { 1, 0 }, { 0, 2 } }),
                            true, "q=3, k=2 is {I_2, diag(1,2)}") });
            });

            for (auto & p : reference::printed_patterns())
                add(string(p.name) + " printed matrix, canonical point order", [&p] { return reference::check_printed(p, true); });
            for (auto & p : reference::observation_patterns())
                add(string(p.name) + " printed matrix, by point lookup", [&p] { return reference::check_printed(p, false); });

            add("nonlooped counts (2,3), (3,3), (2,4)", [] {
                auto p23 = generate(gf(2), 3), p33 = generate(gf(3), 3), p24 = generate(gf(2), 4);
                auto white = [] (const PatternSet & ps, size_t i) { return ps.patterns[i].graph.size() - ps.patterns[i].graph.loops().count(); };
                return first_failure({ expect(white(p23, 0), 3u, "q=2, k=3, I_3"), expect(white(p33, 0), 4u, "q=3, k=3, I_3"),
                        expect(white(p24, 0), 7u, "q=2, k=4, I_4"), expect(white(p24, 1), 15u, "q=2, k=4, diag(H,H)") });
            });

            add("pattern structure for (2,3) and (3,3)", [] {
                for (unsigned q : { 2u, 3u }) {
                    auto ps = generate(gf(q), 3);
                    auto report = verify_counts(ps);
                    if (! report.ok()) {
                        auto f = report.failures().front();
                        return Failure{ "q=" + std::to_string(q) + ": " + f.name };
                    }
                }
                return Failure{};
            });

            add("pattern complement is the polarity graph", [] {
                for (auto [q, k] : vector<std::pair<unsigned, size_t>>{ { 2, 2 }, { 2, 3 }, { 3, 3 }, { 2, 4 } }) {
                    auto ps = generate(gf(q), k);
                    for (auto & p : ps.patterns) {
                        auto c = p.graph.complement();
                        for (size_t i = 0 ; i < ps.points.size() ; ++i)
                            for (size_t j = i ; j < ps.points.size() ; ++j) {
                                bool orth = 0 == pairing(ps.points[i], ps.points[j], p.form).rep;
                                bool edge = (i == j) ? c.looped(i) : c.adjacent(i, j);
                                if (orth != edge)
                                    return Failure{ "q=" + std::to_string(q) + ", k=" + std::to_string(k) + ", points " + std::to_string(i) + ", " + std::to_string(j) };
                            }
                    }
                }
                return Failure{};
            });

            add("fullhouse is not a blowup of the k=2 patterns over GF(2) but is of F2R3", [] {
                auto g2 = generate(gf(2), 2), g3 = generate(gf(2), 3);
                auto fh = named::fullhouse();
                return first_failure({ expect(is_blowup(fh, g2.patterns[0].graph).has_value(), false, "pattern 0 at k=2"),
                        expect(is_blowup(fh, g2.patterns[1].graph).has_value(), false, "pattern 1 at k=2"),
                        expect(is_blowup(fh, g3.patterns[0].graph).has_value(), true, "F2R3") });
            });

            add("K_{2,2,2} is a blowup of the nonlooped triangle", [] {
                auto g2 = generate(gf(2), 2);
                auto & tri = g2.patterns[1].graph;
                return first_failure({ expect(tri.loops().none() && tri.size() == 3, true, "pattern is a nonlooped triangle"),
                        expect(is_blowup(named::complete_multipartite({ 2, 2, 2 }), tri).has_value(), true, "witness") });
            });

            add("blowup example with class sizes 3, 1, 2, 0", [] {
                auto path = example_path();
                auto big = blow_up(path, { 3, 1, 2, 0 });
                auto f3 = gf(3);
                Matrix n(f3, { { 0, 0, 0, 1, 0, 0 }, { 0, 0, 0, 2, 0, 0 }, { 0, 0, 0, 1, 0, 0 },
                        { 1, 2, 1, 0, 1, 1 }, { 0, 0, 0, 1, 0, 1 }, { 0, 0, 0, 1, 1, 2 } });
                auto w = is_blowup(big, path);
                if (! w)
                    return Failure{ "no witness" };
                std::map<int, size_t> sizes;
                for (auto & a : w->assignment)
                    if (a)
                        ++sizes[*a];
                return first_failure({ expect(graph_of(n) == big, true, "printed N has the blowup's pattern"),
                        expect(sizes == std::map<int, size_t>{ { 0, 3 }, { 1, 1 }, { 2, 2 } }, true, "class sizes") });
            });

            add("fullhouse minimum rank is 3 over GF(2) and 2 over GF(3)", [] {
                auto fh = named::fullhouse();
                auto a = MinRankSolver(gf(2)).min_rank(fh).value, b = MinRankSolver(gf(3)).min_rank(fh).value;
                return first_failure({ expect(a.value_or(99), 3u, "blowup, GF(2)"), expect(b.value_or(99), 2u, "blowup, GF(3)"),
                        expect(oracle_min_rank(fh, gf(2)), 3u, "brute force, GF(2)"),
                        expect(oracle_min_rank(fh, gf(3)), 2u, "brute force, GF(3)") });
            });

            add("complete graphs have minimum rank 1", [] {
                for (unsigned q : { 2u, 3u, 4u }) {
                    MinRankSolver s(gf(q));
                    for (size_t n = 2 ; n <= 6 ; ++n)
                        if (auto f = expect(s.min_rank(named::complete(n)).value.value_or(99), 1u,
                                    "K_" + std::to_string(n) + " over GF(" + std::to_string(q) + ")"))
                            return f;
                }
                return Failure{};
            });

            add("complete multipartite graphs and rank 3", [] {
                return first_failure({ expect(multipartite_bound_check({ 2, 2, 2 }, gf(2)), true, "K_{2,2,2} over GF(2)"),
                        expect(multipartite_bound_check({ 10, 10, 10, 10 }, gf(2)), false, "K_{10,10,10,10} over GF(2)") });
            });

            add("minimal forbidden graphs for rank 2 over GF(2) include fullhouse", [] {
                auto run = mine(gf(2), 2, 5);
                bool has = false;
                for (auto & g : run.found)
                    has = has || IsomorphismResult::isomorphic == are_isomorphic(g, named::fullhouse());
                return expect(has, true, "fullhouse found");
            });

            add("closed form for rank 2 over GF(2)", [] {
                return first_failure({ expect(check_f2r2_form(named::complete_multipartite({ 2, 2, 2 })), true, "K_{2,2,2}"),
                        expect(check_f2r2_form(named::fullhouse()), false, "fullhouse") });
            });

            add("patterns --q 2 --k 3 --format matrix prints F2R3", [] {
                std::istringstream in;
                std::ostringstream out, err;
                auto rc = run_cli({ "patterns", "--q", "2", "--k", "3", "--format", "matrix" }, in, out, err);
                std::ostringstream want;
                for (auto & row : reference::printed_patterns().front().matrix)
                    for (size_t j = 0 ; j < row.size() ; ++j)
                        want << row[j] << (j + 1 == row.size() ? "\n" : " ");
                return first_failure({ expect(rc, 0, "exit code"), expect(out.str() == want.str(), true, "output matches") });
            });

            add("minrank --q 3 on fullhouse gives 2", [] {
                std::istringstream in(emit_graph6(named::fullhouse()) + "\n");
                std::ostringstream out, err;
                auto rc = run_cli({ "minrank", "--q", "3" }, in, out, err);
                auto j = Json::parse(out.str());
                return first_failure({ expect(rc, 0, "exit code"), expect(j.at("minrank").get<int>(), 2, "minrank") });
            });

            return result;
        }
    }

    auto run_selftest(std::ostream & out) -> bool
    {
        bool ok = true;
        for (auto & c : cases()) {
            Failure f;
            try {
                f = c.run();
            }
            catch (const std::exception & e) {
                f = string("exception: ") + e.what();
            }
            if (f) {
                ok = false;
                out << "FAIL " << c.name << ": " << *f << '\n';
            }
            else
                out << "PASS " << c.name << '\n';
        }
        return ok;
    }
}
