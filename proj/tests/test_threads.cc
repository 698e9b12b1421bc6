#include <gcell/constructions.hh>
#include <gcell/dsl.hh>
#include <gcell/errors.hh>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gcell;

namespace
{
    auto constant(const Vertex & v, Index depth) -> ThreadPrefix
    {
        return ThreadPrefix{std::vector<Vertex>(depth, v)};
    }

    auto a_thread(Index depth) -> ThreadPrefix
    {
        ThreadPrefix p;
        for (Index n = 1 ; n <= depth ; ++n)
            p.coords.push_back(Vertex::a(n));
        return p;
    }

    auto b_thread(Index k, Index depth) -> ThreadPrefix
    {
        ThreadPrefix p;
        for (Index n = 1 ; n <= depth ; ++n)
            p.coords.push_back(Vertex::b(n, k));
        return p;
    }

    auto half = Vertex::rational(1, 2);
    auto zero = Vertex::rational(0);
    auto one = Vertex::rational(1);
}

TEST_CASE("extend")
{
    auto sys = nonregular_system();
    auto ext = extend(*sys, ThreadPrefix{{Vertex::a(1)}}, 5);
    for (auto & v : {Vertex::a(2), Vertex::c(1, 2, 1), Vertex::d(2, 1)})
        CHECK(std::find(ext.begin(), ext.end(), ThreadPrefix{{Vertex::a(1), v}}) != ext.end());
    for (auto & p : ext)
        CHECK(is_consistent(*sys, p));

    auto id = circle_identity_system(8);
    CHECK(extend(*id, ThreadPrefix{{half}}, 0) == std::vector<ThreadPrefix>{constant(half, 2)});

    auto tail = vanishing_tail_system();
    CHECK(extend(*tail, ThreadPrefix{{Vertex::dyadic(1)}}, 50).empty());
}

TEST_CASE("enumeration")
{
    TruncatedSystem circle(circle_system(8), 4, 1);
    auto all = enumerate_threads(circle, 4);
    std::vector<ThreadPrefix> expected;
    for (Index k = 0 ; k <= 4 ; ++k)
        expected.push_back(constant(Vertex::rational(k, 8), 4));
    CHECK(all == expected);

    TruncatedSystem three(circle_identity_system(2), 3, 1);
    CHECK(enumerate_threads(three, 3) == std::vector<ThreadPrefix>{constant(zero, 3), constant(half, 3), constant(one, 3)});

    TruncatedSystem nr(nonregular_system(), 3, 3);
    auto threads = enumerate_threads(nr, 3);
    CHECK(std::is_sorted(threads.begin(), threads.end()));
    CHECK(std::binary_search(threads.begin(), threads.end(), a_thread(3)));
    CHECK(std::binary_search(threads.begin(), threads.end(), b_thread(2, 3)));

    CHECK_THROWS_AS(enumerate_threads(nr, 4), RangeError);
    CHECK_THROWS_AS(enumerate_threads(nr, 3, EnumerationOptions{2, nullptr}), ResourceError);

    TruncatedSystem gone(vanishing_tail_system(), 5, 5);
    CHECK(enumerate_threads(gone, 5).empty());
}

TEST_CASE("live and dead prefixes account for every truncated extension")
{
    for (auto & t : {TruncatedSystem(nonregular_system(), 4, 6), TruncatedSystem(circle_system(8), 4, 1), TruncatedSystem(vanishing_tail_system(), 4, 6)}) {
        for (Index n = 2 ; n <= 4 ; ++n) {
            std::vector<ThreadPrefix> dead;
            auto live = enumerate_threads(t, n, EnumerationOptions{1'000'000, &dead});
            std::set<ThreadPrefix> extended;
            for (auto & p : enumerate_threads(t, n - 1))
                for (auto & q : extend(t.system(), p, 1'000))
                    if (t.contains(n, q.at(n)))
                        extended.insert(q);
            std::set<ThreadPrefix> both(live.begin(), live.end());
            for (auto & d : dead) {
                CHECK(! both.contains(d));
                both.insert(d);
            }
            CHECK(both == extended);
            for (auto & p : live)
                CHECK(is_consistent(t.system(), p));
        }
    }
}

TEST_CASE("natural relation at finite depth")
{
    TruncatedSystem id(circle_identity_system(16), 5, 1);
    CHECK(related_at_depth(id, constant(zero, 5), constant(half, 5)));
    TruncatedSystem id1(circle_identity_system(16), 1, 1);
    CHECK(! related_at_depth(id1, constant(zero, 1), constant(one, 1)));
    CHECK_THROWS_AS(related_at_depth(id, constant(zero, 5), constant(zero, 4)), UsageError);

    TruncatedSystem nr(nonregular_system(), 4, 6);
    auto all = enumerate_threads(nr, 4);
    RelatednessMatrix r(nr, all);
    for (std::size_t x = 0 ; x < all.size() ; ++x) {
        CHECK(r(x, x));
        for (std::size_t y = 0 ; y < all.size() ; ++y) {
            CHECK(r(x, y) == r(y, x));
            if (x % 7 == 0)
                CHECK(r(x, y) == related_at_depth(nr, all[x], all[y]));
            // depth monotonicity
            if (r(x, y))
                CHECK(related_at_depth(nr, all[x].restricted(3), all[y].restricted(3)));
        }
    }
}

TEST_CASE("transitivity counterexamples")
{
    TruncatedSystem id(circle_identity_system(16), 1, 1);
    auto triple = transitivity_counterexample(id, 1);
    REQUIRE(triple);
    CHECK((*triple)[0] == constant(zero, 1));
    CHECK((*triple)[1] == constant(half, 1));
    CHECK((*triple)[2] == constant(one, 1));

    TruncatedSystem circle(circle_system(16), 6, 1);
    CHECK(! transitivity_counterexample(circle, 6));

    // transitive levels everywhere leave nothing to find
    auto toy = finite_system(load_dsl_file("tests/data/toy3.sys"));
    TruncatedSystem t(toy, 4, 1);
    for (Index i = 1 ; i <= 4 ; ++i)
        CHECK(is_transitive_on(t.graph(i).relation, 1).transitive);
    for (Index n = 1 ; n <= 4 ; ++n)
        CHECK(! transitivity_counterexample(t, n));
}

TEST_CASE("g-cell certificates")
{
    auto sys = nonregular_system();
    for (Index i = 1 ; i <= 5 ; ++i)
        CHECK(gcell_certificate(*sys, a_thread(6), i, 6) == i);

    // the prefix through d_3^5 follows its trajectory up to the first c vertex
    auto chain = d_trajectory(3, 5);
    auto p = prefix_through(*sys, 3 + static_cast<Index>(chain.size()) - 1, chain.back());
    CHECK(p.at(3) == Vertex::d(3, 5));
    CHECK(gcell_certificate(*sys, p, 3, p.depth()) == 3 + static_cast<Index>(chain.size()) - 1);
    CHECK(! gcell_certificate(*sys, p, 3, p.depth() - 1));

    auto circle = circle_system(16);
    CHECK(gcell_certificate(*circle, constant(Vertex::rational(1, 4), 3), 2, 3) == 2);
}

TEST_CASE("certificates give the transitivity step on enumerated prefixes")
{
    TruncatedSystem t(nonregular_system(), 5, 5);
    auto all = enumerate_threads(t, 5);
    RelatednessMatrix r(t, all);
    auto & sys = t.system();
    for (std::size_t x = 0 ; x < all.size() ; ++x)
        for (Index i = 1 ; i <= 2 ; ++i) {
            auto j = gcell_certificate(sys, all[x], i, 5);
            if (! j)
                continue;
            for (std::size_t y = 0 ; y < all.size() ; ++y) {
                if (! t.related(*j, all[x].at(*j), all[y].at(*j)))
                    continue;
                for (std::size_t z = 0 ; z < all.size() ; ++z)
                    if (t.related(*j, all[y].at(*j), all[z].at(*j)))
                        CHECK(t.related(i, all[x].at(i), all[z].at(i)));
            }
        }
}

TEST_CASE("basic opens and saturation")
{
    CHECK(in_basic_open(a_thread(3), BasicOpen{2, {Vertex::a(2)}}));
    CHECK(! in_basic_open(b_thread(2, 3), BasicOpen{3, {Vertex::a(3)}}));
    CHECK(in_basic_open(constant(half, 4), BasicOpen{1, {zero, half}}));
    CHECK_THROWS_AS(in_basic_open(constant(half, 1), BasicOpen{2, {half}}), UsageError);

    TruncatedSystem circle(circle_system(8), 4, 1);
    auto all = enumerate_threads(circle, 4);
    CHECK(saturate(circle, {constant(zero, 4)}, all) == std::vector<ThreadPrefix>{constant(zero, 4), constant(half, 4)});
    CHECK(saturate(circle, all, all) == all);

    TruncatedSystem nr(nonregular_system(), 3, 4);
    auto threads = enumerate_threads(nr, 3);
    auto sat = saturate(nr, {a_thread(3)}, threads);
    CHECK(std::find(sat.begin(), sat.end(), a_thread(3)) != sat.end());
    for (auto & y : sat)
        for (Index n = 1 ; n <= 3 ; ++n)
            CHECK((y.at(n) == Vertex::a(n) || (y.at(n).tag == Tag::B && y.at(n).params[1] >= n)));
    for (std::size_t s = 0 ; s < threads.size() ; s += 5) {
        auto small = saturate(nr, {threads[s]}, threads);
        auto big = saturate(nr, {threads[s], a_thread(3)}, threads);
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        CHECK(std::binary_search(small.begin(), small.end(), threads[s]));
    }
}

TEST_CASE("closedness probe")
{
    TruncatedSystem id(circle_identity_system(16), 3, 1);
    auto u = closedness_probe(id, constant(zero, 3), {BasicOpen{1, {zero, half}}});
    REQUIRE(u);
    CHECK(u->level == 1);
    CHECK(u->set == SymbolicVertexSet{zero});

    auto full = finite_system(parse_dsl("system full\nlevel 1\nvertex p q\nedge p q\n"));
    TruncatedSystem f(full, 2, 1);
    auto v = closedness_probe(f, constant(Vertex::user("q"), 2), {BasicOpen{1, {Vertex::user("p"), Vertex::user("q")}}});
    REQUIRE(v);
    CHECK(v->level == 1);

    TruncatedSystem nr(nonregular_system(), 3, 4);
    CHECK_THROWS_AS(closedness_probe(nr, a_thread(3), {BasicOpen{1, {Vertex::a(1)}}}), UsageError);
}

TEST_CASE("separation sets")
{
    TruncatedSystem nr(nonregular_system(), 5, 5);
    auto s = separation_sets(nr, a_thread(5), b_thread(2, 5));
    CHECK(s.around_x.level == 3);
    CHECK(s.around_x.center == SymbolicVertexSet{Vertex::a(3)});
    CHECK(s.around_y.center == SymbolicVertexSet{Vertex::b(3, 2)});
    CHECK(s.disjoint);
    CHECK_THROWS_AS(separation_sets(nr, a_thread(5), b_thread(7, 5)), UsageError);

    TruncatedSystem deep(nonregular_system(), 7, 7);
    CHECK(separation_sets(deep, a_thread(7), b_thread(5, 7)).around_x.level == 6);

    auto two = finite_system(parse_dsl("system two\nlevel 1\nvertex p q\n"));
    TruncatedSystem t(two, 2, 1);
    auto sep = separation_sets(t, constant(Vertex::user("p"), 2), constant(Vertex::user("q"), 2));
    CHECK(sep.around_x.level == 1);
    CHECK(sep.disjoint);
    CHECK(sep.around_x.members == std::vector<ThreadPrefix>{constant(Vertex::user("p"), 2)});
}
