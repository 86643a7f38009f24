/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Acceptance gate: one line per criterion, each held to its time limit.

#include <minrank/blowup.hh>
#include <minrank/graphs.hh>
#include <minrank/matrix.hh>
#include <minrank/miner.hh>
#include <minrank/oracle.hh>
#include <minrank/patterns.hh>
#include <minrank/reference.hh>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace minrank;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    using Failure = std::optional<string>;

    auto gf(unsigned q) -> FieldPtr
    {
        return std::make_shared<const Field>(Field::from_order(q));
    }

    auto ipow(long long b, size_t e) -> long long
    {
        long long r = 1;
        while (e--)
            r *= b;
        return r;
    }

    auto fail(std::ostringstream & s) -> Failure { return s.str(); }

    // ---- 1
    auto bit_exact_patterns() -> Failure
    {
        for (auto & p : reference::printed_patterns())
            if (auto f = reference::check_printed(p, true))
                return f;
        for (auto & p : reference::observation_patterns())
            if (auto f = reference::check_printed(p, false))
                return f;
        return std::nullopt;
    }

    // ---- 2
    auto fullhouse_field_dependence() -> Failure
    {
        auto fh = named::fullhouse();
        for (auto [q, want] : vector<std::pair<unsigned, size_t>>{ { 2, 3 }, { 3, 2 } }) {
            auto field = gf(q);
            auto b = MinRankSolver(field).min_rank(fh).value;
            auto o = oracle_min_rank(fh, field);
            if (! b || *b != want || o != want) {
                std::ostringstream s;
                s << "q=" << q << ": blowup " << (b ? std::to_string(*b) : "none") << ", brute force " << o << ", expected " << want;
                return fail(s);
            }
        }
        return std::nullopt;
    }

    // ---- 3
    auto oracle_sweep() -> Failure
    {
        auto orders = enumerate_graphs_upto(6);
        const vector<size_t> classes{ 1, 1, 2, 4, 11, 34, 156 };
        for (size_t n = 0 ; n <= 6 ; ++n)
            if (orders[n].size() != classes[n]) {
                std::ostringstream s;
                s << "enumeration found " << orders[n].size() << " graphs on " << n << " vertices, expected " << classes[n];
                return fail(s);
            }

        size_t compared = 0;
        for (auto [q, n_max] : vector<std::pair<unsigned, size_t>>{ { 2, 6 }, { 3, 5 } }) {
            auto field = gf(q);
            MinRankSolver solver(field);
            for (size_t n = 1 ; n <= n_max ; ++n)
                for (auto & g : orders[n]) {
                    auto b = solver.min_rank(g).value;
                    auto o = oracle_min_rank(g, field);
                    ++compared;
                    if (! b || *b != o) {
                        std::ostringstream s;
                        s << emit_graph6(g) << " over GF(" << q << "): blowup " << (b ? std::to_string(*b) : "none") << ", brute force " << o;
                        return fail(s);
                    }
                }
        }
        // all classes on 1..6 vertices over GF(2), 1..5 over GF(3)
        if (compared != 208 + 52)
            return "compared " + std::to_string(compared) + " graphs";
        return std::nullopt;
    }

    // ---- 4
    auto counting_theorems() -> Failure
    {
        for (unsigned q : { 2u, 3u, 4u, 5u })
            for (size_t k = 0 ; k <= 4 ; ++k) {
                if (point_count(q, k) > default_vertex_budget)
                    continue;
                auto field = gf(q);
                auto ps = generate(field, k);
                long long n = (ipow(q, k) - 1) / (q - 1), degree = k ? ipow(q, k - 1) : 0;

                vector<long long> white;
                for (auto & p : ps.patterns) {
                    auto & g = p.graph;
                    if (static_cast<long long>(g.size()) != n)
                        return "q=" + std::to_string(q) + ", k=" + std::to_string(k) + ": wrong vertex count";
                    long long w = 0;
                    for (size_t v = 0 ; v < g.size() ; ++v) {
                        long long d = (g.looped(v) ? 1 : 0);
                        for (size_t u = 0 ; u < g.size() ; ++u)
                            if (u != v && g.adjacent(v, u))
                                ++d;
                        if (d != degree)
                            return "q=" + std::to_string(q) + ", k=" + std::to_string(k) + ": vertex " + std::to_string(v) + " has degree " + std::to_string(d);
                        if (! g.looped(v))
                            ++w;
                    }
                    white.push_back(w);
                }

                vector<long long> want;
                if (0 == k)
                    want = { 0 };
                else if (q % 2 == 0) {
                    want = { (ipow(q, k - 1) - 1) / (q - 1) };
                    if (k % 2 == 0)
                        want.push_back(n);
                }
                else if (k % 2 == 1)
                    want = { (ipow(q, k - 1) - 1) / (q - 1) };
                else {
                    long long m = k / 2;
                    want = { (ipow(q, m) - 1) * (ipow(q, m - 1) + 1) / (q - 1), (ipow(q, m) + 1) * (ipow(q, m - 1) - 1) / (q - 1) };
                    std::sort(want.begin(), want.end());
                    std::sort(white.begin(), white.end());
                }
                if (white != want) {
                    std::ostringstream s;
                    s << "q=" << q << ", k=" << k << ": nonlooped counts";
                    for (auto x : white)
                        s << ' ' << x;
                    s << ", expected";
                    for (auto x : want)
                        s << ' ' << x;
                    return fail(s);
                }
            }
        return std::nullopt;
    }

    // ---- 5
    auto plane_structure() -> Failure
    {
        for (unsigned q : { 2u, 3u, 4u, 5u }) {
            auto ps = generate(gf(q), 3);
            auto & g = ps.patterns.at(0).graph;
            vector<size_t> white;
            for (size_t v = 0 ; v < g.size() ; ++v)
                if (! g.looped(v))
                    white.push_back(v);
            if (white.size() != q + 1)
                return "q=" + std::to_string(q) + ": " + std::to_string(white.size()) + " nonlooped vertices";
            for (auto a : white) {
                size_t w = 0, b = 0;
                for (size_t u = 0 ; u < g.size() ; ++u)
                    if (u != a && g.adjacent(a, u))
                        ++(g.looped(u) ? b : w);
                for (auto c : white)
                    if (c != a && ! g.adjacent(a, c))
                        return "q=" + std::to_string(q) + ": nonlooped vertices not a clique";
                if (w != q || b != q * q - q)
                    return "q=" + std::to_string(q) + ": vertex " + std::to_string(a) + " has " + std::to_string(w) + " nonlooped and "
                        + std::to_string(b) + " looped neighbours";
            }
        }
        return std::nullopt;
    }

    // ---- 6
    auto multipartite() -> Failure
    {
        auto k222 = named::complete_multipartite({ 2, 2, 2 });
        auto k10 = named::complete_multipartite({ 10, 10, 10, 10 });
        auto a = MinRankSolver(gf(2)).min_rank(k222, 2);
        auto b = MinRankSolver(gf(2)).min_rank(k10, 3);
        auto c = MinRankSolver(gf(3)).min_rank(k10, 3);
        if (! a.value)
            return string("K_{2,2,2} over GF(2) not within rank 2");
        if (b.value)
            return "K_{10,10,10,10} over GF(2) has rank " + std::to_string(*b.value);
        if (b.exceeds != 3)
            return string("K_{10,10,10,10} over GF(2): sweep stopped early");
        if (! c.value)
            return string("K_{10,10,10,10} over GF(3) not within rank 3");
        return std::nullopt;
    }

    // ---- 7
    auto all_symmetric(const FieldPtr & f, size_t k) -> vector<Matrix>
    {
        vector<std::pair<size_t, size_t>> slots;
        for (size_t i = 0 ; i < k ; ++i)
            for (size_t j = i ; j < k ; ++j)
                slots.emplace_back(i, j);
        vector<Matrix> result;
        vector<unsigned> digit(slots.size(), 0);
        while (true) {
            Matrix m(f, k, k);
            for (size_t s = 0 ; s < slots.size() ; ++s)
                m(slots[s].first, slots[s].second) = m(slots[s].second, slots[s].first) = f->element(digit[s]);
            result.push_back(m);
            size_t s = 0;
            while (s < digit.size() && ++digit[s] == f->order())
                digit[s++] = 0;
            if (s == digit.size())
                break;
        }
        return result;
    }

    // diag(a_1..a_s) then H-shaped 2x2 blocks (even q only), then nothing else
    auto block_diagonal(const Matrix & d, bool even) -> bool
    {
        auto k = d.rows();
        size_t i = 0;
        while (i < k && d(i, i).rep != 0)
            ++i;
        for (size_t r = 0 ; r < i ; ++r)
            for (size_t c = 0 ; c < k ; ++c)
                if (r != c && (d(r, c).rep != 0 || d(c, r).rep != 0))
                    return false;
        for ( ; i < k ; i += 2) {
            if (! even || i + 1 >= k)
                return false;
            for (size_t c = 0 ; c < k ; ++c) {
                bool partner = (c == i + 1);
                if ((d(i, c).rep != 0) != partner || (d(i + 1, c).rep != 0) != (c == i))
                    return false;
            }
        }
        return true;
    }

    auto normal_target(const FieldPtr & f, size_t k, CongruenceTag tag) -> Matrix
    {
        auto m = Matrix::identity(f, k);
        if (tag == CongruenceTag::symplectic)
            for (size_t i = 0 ; i < k ; i += 2) {
                m(i, i) = m(i + 1, i + 1) = f->zero();
                m(i, i + 1) = m(i + 1, i) = f->one();
            }
        if (tag == CongruenceTag::nonsquare_det)
            m(k - 1, k - 1) = f->find_nonsquare();
        return m;
    }

    auto classification() -> Failure
    {
        std::mt19937_64 rng(20261016);
        for (unsigned q : { 2u, 3u }) {
            auto f = gf(q);
            for (size_t k = 1 ; k <= 3 ; ++k) {
                auto reps = canonical_representatives(f, k);
                for (auto & b : all_symmetric(f, k)) {
                    if (rank(b) != k)
                        continue;
                    auto where = [&] { return "q=" + std::to_string(q) + ", B=" + b.to_string(); };

                    auto d = congruence_diagonalize(b);
                    if (! (b.congruent(d.transform) == d.reduced) || rank(d.transform) != k)
                        return where() + ": diagonalisation is not a congruence";
                    if (! block_diagonal(d.reduced, f->is_even()))
                        return where() + ": reduced form " + d.reduced.to_string() + " is not in block form";

                    auto cls = classify_invertible_symmetric(b);
                    CongruenceTag expected;
                    if (f->is_even())
                        expected = 0 == d.diagonal_pivots ? CongruenceTag::symplectic : CongruenceTag::identity;
                    else
                        expected = f->is_square(determinant(d.reduced)) ? CongruenceTag::square_det : CongruenceTag::nonsquare_det;
                    if (cls.tag != expected)
                        return where() + ": tag " + to_string(cls.tag) + " but diagonalisation says " + to_string(expected);
                    if (f->is_even() && (cls.tag == CongruenceTag::symplectic) != b.has_zero_diagonal())
                        return where() + ": symplectic tag disagrees with the zero diagonal test";

                    auto norm = congruence_normalize(b);
                    if (! (b.congruent(norm.transform) == norm.normal_form) || rank(norm.transform) != k)
                        return where() + ": normalisation is not a congruence";
                    if (! (norm.normal_form == normal_target(f, k, cls.tag)))
                        return where() + ": normal form " + norm.normal_form.to_string();
                    bool projective_only = ! f->is_even() && k % 2 == 1;
                    if (projective_only ? (cls.representative != 0 || cls.projective_tag != CongruenceTag::identity)
                            : ! (reps.at(cls.representative) == norm.normal_form))
                        return where() + ": representative " + std::to_string(cls.representative);

                    for (int t = 0 ; t < 100 ; ++t) {
                        auto c = Matrix::random_invertible(f, k, rng);
                        auto other = classify_invertible_symmetric(b.congruent(c));
                        if (other.tag != cls.tag || other.projective_tag != cls.projective_tag || other.representative != cls.representative)
                            return where() + ": class changed under congruence by " + c.to_string();
                    }
                }
            }
        }
        return std::nullopt;
    }

    // ---- 8
    auto decomposition_contract(const Matrix & a) -> Failure
    {
        auto r = rank_decomposition(a);
        if (r.inner.rows() != rank(a))
            return "order(B) = " + std::to_string(r.inner.rows()) + " for rank " + std::to_string(rank(a)) + " matrix " + a.to_string();
        if (rank(r.inner) != r.inner.rows())
            return "B not invertible for " + a.to_string();
        if (! (r.outer.transpose() * r.inner * r.outer == a))
            return "U^t B U differs from " + a.to_string();
        return std::nullopt;
    }

    auto rank_decomposition_contract() -> Failure
    {
        auto f2 = gf(2);
        size_t count = 0;
        for (auto & a : all_symmetric(f2, 4)) {
            ++count;
            if (auto f = decomposition_contract(a))
                return f;
        }
        if (count != 1024)
            return "enumerated " + std::to_string(count) + " symmetric 4x4 matrices over GF(2)";

        std::mt19937_64 rng(7);
        for (unsigned q : { 3u, 4u }) {
            auto f = gf(q);
            std::uniform_int_distribution<size_t> size(1, 6);
            for (int t = 0 ; t < 1000 ; ++t) {
                auto n = size(rng);
                // mix of full and deficient rank
                auto a = Matrix::random_symmetric(f, n, rng);
                if (t % 2) {
                    auto low = Matrix::random(f, n / 2 + 1, n, rng);
                    a = low.transpose() * Matrix::random_symmetric(f, n / 2 + 1, rng) * low;
                }
                if (auto e = decomposition_contract(a))
                    return e;
            }
        }
        return std::nullopt;
    }

    // ---- 9
    auto miner_ground_truth() -> Failure
    {
        auto f2 = gf(2);
        auto k1 = mine(f2, 1, 5);
        auto p3 = named::path(3);
        SimpleGraph two_k2(4, { { 0, 1 }, { 2, 3 } });
        auto iso = [] (const SimpleGraph & a, const SimpleGraph & b) { return IsomorphismResult::isomorphic == are_isomorphic(a, b); };
        if (k1.found.size() != 2 || ! ((iso(k1.found[0], p3) && iso(k1.found[1], two_k2)) || (iso(k1.found[0], two_k2) && iso(k1.found[1], p3)))) {
            std::ostringstream s;
            s << "mine(2,1,5) found";
            for (auto & g : k1.found)
                s << ' ' << emit_graph6(g);
            return fail(s);
        }

        auto k2 = mine(f2, 2, 5);
        bool fullhouse = false;
        for (auto & g : k2.found)
            fullhouse = fullhouse || iso(g, named::fullhouse());
        if (! fullhouse)
            return string("mine(2,2,5) misses fullhouse");

        MinRankSolver solver(f2);
        for (auto & order : enumerate_graphs_upto(6))
            for (auto & g : order) {
                bool member = solver.member(g, 2).has_value();
                if (member != check_f2r2_form(g))
                    return emit_graph6(g) + ": blowup membership " + (member ? "yes" : "no") + " but closed form " + (member ? "no" : "yes");
            }
        return std::nullopt;
    }

    // ---- 10
    auto tree_field_independence() -> Failure
    {
        const vector<size_t> trees_per_order{ 0, 1, 1, 1, 2, 3, 6, 11 };
        MinRankSolver s2(gf(2)), s3(gf(3));
        auto orders = enumerate_graphs_upto(7);
        for (size_t n = 1 ; n <= 7 ; ++n) {
            size_t trees = 0;
            for (auto & g : orders[n]) {
                if (g.edge_count() != n - 1)
                    continue;
                // connected?
                vector<bool> seen(n, false);
                vector<int> stack{ 0 };
                seen[0] = true;
                size_t reached = 1;
                while (! stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    for (size_t u = 0 ; u < n ; ++u)
                        if (g.adjacent(v, u) && ! seen[u]) {
                            seen[u] = true;
                            ++reached;
                            stack.push_back(u);
                        }
                }
                if (reached != n)
                    continue;
                ++trees;
                auto a = s2.min_rank(g).value, b = s3.min_rank(g).value;
                if (! a || ! b || *a != *b)
                    return emit_graph6(g) + ": GF(2) and GF(3) minimum ranks differ";
            }
            if (trees != trees_per_order[n])
                return "found " + std::to_string(trees) + " trees on " + std::to_string(n) + " vertices";
        }
        return std::nullopt;
    }

    struct Criterion
    {
        int number;
        string name;
        double limit_seconds;
        std::function<Failure ()> run;
    };
}

auto main() -> int
{
    vector<Criterion> criteria{
        { 1, "printed pattern matrices reproduced exactly", 1, bit_exact_patterns },
        { 2, "fullhouse: rank 3 over GF(2), 2 over GF(3), brute force agrees", 1, fullhouse_field_dependence },
        { 3, "blowup minimum rank equals brute force, n <= 6 over GF(2), n <= 5 over GF(3)", 300, oracle_sweep },
        { 4, "pattern vertex counts, regularity and nonlooped counts, q <= 5, k <= 4", 10, counting_theorems },
        { 5, "k = 3 nonlooped clique and neighbour counts, q <= 5", 5, plane_structure },
        { 6, "complete multipartite bounds at desk scale", 30, multipartite },
        { 7, "congruence classification complete and invariant", 60, classification },
        { 8, "rank decomposition U^t B U = A with order(B) = rank(A)", 60, rank_decomposition_contract },
        { 9, "miner ground truth and rank 2 closed form over GF(2)", 120, miner_ground_truth },
        { 10, "trees on at most 7 vertices: same minimum rank over GF(2) and GF(3)", 60, tree_field_independence }
    };

    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Failure f;
        try {
            f = c.run();
        }
        catch (const std::exception & e) {
            f = string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (! f && secs > c.limit_seconds)
            f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";

        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.3f s", secs);
        std::cout << (f ? "FAIL" : "PASS") << " criterion " << c.number << ": " << c.name << " (" << timing << ")";
        if (f) {
            std::cout << " -- " << *f;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures ? 1 : 0;
}
