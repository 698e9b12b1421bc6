#include <gcell/relation.hh>
#include <gcell/errors.hh>

#include <doctest.h>

#include <random>
#include <set>

using namespace gcell;

namespace
{
    // Brute-force model: a PeriodicSet is compared pointwise against a plain
    // std::set over a window wide enough to cover every threshold used.
    constexpr Index lo = -40, hi = 400;

    auto materialise(const PeriodicSet & s) -> std::set<Index>
    {
        std::set<Index> result;
        for (Index v = lo ; v <= hi ; ++v)
            if (s.contains(v))
                result.insert(v);
        return result;
    }

    auto random_periodic(std::mt19937_64 & rng) -> std::pair<PeriodicSet, std::set<Index>>
    {
        PeriodicSet s;
        std::set<Index> model;
        int parts = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int p = 0 ; p < parts ; ++p) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                Index v = std::uniform_int_distribution<Index>(-10, 30)(rng);
                s = s.unite(PeriodicSet::single(v));
                model.insert(v);
            }
            else {
                Index a = std::uniform_int_distribution<Index>(-10, 30)(rng);
                Index st = std::uniform_int_distribution<Index>(1, 6)(rng);
                s = s.unite(PeriodicSet::progression(a, st));
                for (Index v = a ; v <= hi ; v += st)
                    model.insert(v);
            }
        }
        return {s, model};
    }
}

TEST_CASE("vertex names and order")
{
    CHECK(Vertex::a(3).to_string() == "a_3");
    CHECK(Vertex::b(3, 2).to_string() == "b_3^2");
    CHECK(Vertex::c(1, 4, 6).to_string() == "c1_4_6");
    CHECK(Vertex::d(2, 5).to_string() == "d_2^5");
    CHECK(Vertex::rational(2, 4).to_string() == "1/2");
    CHECK(Vertex::rational(4, 4).to_string() == "1");
    CHECK(Vertex::rational(1, 2) == Vertex::rational(3, 6));
    CHECK(Vertex::rational(1, 3) < Vertex::rational(1, 2));
    CHECK(Vertex::a(5) < Vertex::b(1, 1));
    CHECK(Vertex::b(2, 9) < Vertex::b(3, 1));
    CHECK(Vertex::a(1).with_origin(2).to_string() == "2:a_1");
    CHECK_THROWS_AS(Vertex::rational(1, 0), ParameterError);
    CHECK_THROWS_AS(Vertex::make(Tag::B, {1}), ParameterError);
}

TEST_CASE("periodic sets agree with a brute-force model")
{
    std::mt19937_64 rng(17);
    for (int round = 0 ; round < 300 ; ++round) {
        auto [x, mx] = random_periodic(rng);
        auto [y, my] = random_periodic(rng);

        std::set<Index> u, n, m;
        std::set_union(mx.begin(), mx.end(), my.begin(), my.end(), std::inserter(u, u.end()));
        std::set_intersection(mx.begin(), mx.end(), my.begin(), my.end(), std::inserter(n, n.end()));
        std::set_difference(mx.begin(), mx.end(), my.begin(), my.end(), std::inserter(m, m.end()));

        CHECK(materialise(x) == mx);
        CHECK(materialise(x.unite(y)) == u);
        CHECK(materialise(x.intersect(y)) == n);
        CHECK(materialise(x.minus(y)) == m);
        CHECK(x.unite(y) == y.unite(x));
        CHECK(x.intersect(y) == y.intersect(x));
        CHECK(x.unite(x) == x);
        CHECK(x.minus(x).empty());
        CHECK(x.minus(y).unite(x.intersect(y)) == x);
    }
}

TEST_CASE("periodic normal form")
{
    auto evens = PeriodicSet::progression(2, 2);
    auto odds = PeriodicSet::progression(1, 2);
    auto all = evens.unite(odds);
    CHECK(all == PeriodicSet::progression(1, 1));
    CHECK(all.period() == 1);
    CHECK(PeriodicSet::progression(5, 2) == PeriodicSet::progression(7, 2).unite(PeriodicSet::single(5)));
    CHECK(PeriodicSet::progression(3, 4).unite(PeriodicSet::progression(5, 4)) == PeriodicSet::progression(3, 2));
    CHECK(PeriodicSet{}.empty());
    CHECK(PeriodicSet::single(4).minus(PeriodicSet::single(4)) == PeriodicSet{});
}

TEST_CASE("family enumeration count")
{
    for (Index a = 1 ; a <= 7 ; ++a)
        for (Index s = 1 ; s <= 5 ; ++s)
            for (Index bound = a ; bound <= 30 ; ++bound) {
                auto f = LinearFamily::of(Tag::Nat, {}, a, s);
                CHECK(f.enumerate(bound).size() == static_cast<std::size_t>((bound - a) / s + 1));
                CHECK(SymbolicVertexSet::of(f).enumerate(bound).size() == f.enumerate(bound).size());
            }
}

TEST_CASE("compare_sets")
{
    auto x = Vertex::user("x");
    CHECK(compare_sets({x}, {x}).relation == SetComparison::Equal);
    CHECK(! compare_sets({x}, {x}).separator);

    SymbolicVertexSet small{Vertex::b(3, 1)};
    auto large = small.unite(SymbolicVertexSet::of(LinearFamily::of(Tag::D, {3}, 1, 2)));
    auto c = compare_sets(small, large);
    CHECK(c.relation == SetComparison::ASubset);
    CHECK(c.separator == Vertex::d(3, 1));

    auto odd = SymbolicVertexSet::of(LinearFamily::of(Tag::D, {3}, 1, 2));
    auto even = SymbolicVertexSet::of(LinearFamily::of(Tag::D, {3}, 2, 2));
    auto e = compare_sets(odd, even);
    CHECK(e.relation == SetComparison::Incomparable);
    CHECK(e.separator == Vertex::d(3, 1));
    CHECK(odd.intersect(even).empty());
    CHECK(compare_sets(odd.unite(even), SymbolicVertexSet::of(LinearFamily::of(Tag::D, {3}, 1, 1))).relation == SetComparison::Equal);
}

TEST_CASE("symbolic set text and origins")
{
    SymbolicVertexSet s{Vertex::a(3)};
    s.insert(LinearFamily::of(Tag::B, {3}, 3, 1));
    CHECK(s.to_string() == "{a_3, b_3^{3+j}}");
    auto tagged = s.with_origin(2);
    CHECK(tagged.contains(Vertex::b(3, 7).with_origin(2)));
    CHECK(! tagged.contains(Vertex::b(3, 7)));
    CHECK(tagged.from_origin(2) == s);
    CHECK(tagged.from_origin(1).empty());
}

TEST_CASE("explicit relations")
{
    auto p = Vertex::user("p"), q = Vertex::user("q");
    SymbolicVertexSet pq{p, q};

    auto delta = make_relation({}, pq);
    CHECK(ball(p, delta) == SymbolicVertexSet{p});
    CHECK(two_ball(p, delta) == SymbolicVertexSet{p});
    CHECK(delta.edges().empty());

    auto r = make_relation({{p, q}}, pq);
    CHECK(r.related(q, p));
    CHECK(r.related(p, p));
    CHECK(r.edges().size() == 1);

    CHECK_THROWS_AS(make_relation({{p, Vertex::user("z")}}, pq), DomainError);
    CHECK_THROWS_AS(ball(Vertex::user("z"), r), DomainError);
    CHECK(ball_set({}, r).empty());
}

TEST_CASE("circle relation on a coarse grid")
{
    auto v = [] (Index p, Index q) { return Vertex::rational(p, q); };
    SymbolicVertexSet u{v(0, 1), v(1, 4), v(1, 2), v(3, 4), v(1, 1)};
    auto r = make_relation({{v(1, 4), v(3, 4)}, {v(0, 1), v(1, 2)}, {v(1, 2), v(1, 1)}}, u);

    CHECK(r.related(v(1, 4), v(3, 4)));
    CHECK(r.related(v(1, 1), v(1, 2)));
    CHECK(ball(v(0, 1), r) == SymbolicVertexSet{v(0, 1), v(1, 2)});
    CHECK(ball_set({v(0, 1), v(1, 2)}, r) == SymbolicVertexSet{v(0, 1), v(1, 2), v(1, 1)});
    CHECK(two_ball(v(0, 1), r).contains(v(1, 1)));

    auto t = is_transitive_on(r, 1);
    REQUIRE(! t.transitive);
    auto [x, y, z] = *t.witness;
    CHECK(x == v(0, 1));
    CHECK(y == v(1, 2));
    CHECK(z == v(1, 1));
}

TEST_CASE("full relation and transitivity")
{
    SymbolicVertexSet u = SymbolicVertexSet::of(LinearFamily::of(Tag::Nat, {}, 1, 1));
    auto r = Relation::full(u);
    CHECK(r.related(Vertex::nat(3), Vertex::nat(900)));
    CHECK(two_ball(Vertex::nat(2), r) == u);
    CHECK(is_transitive_on(r, 20).transitive);
    CHECK(is_transitive_on(make_relation({}, {Vertex::user("x")}), 0).transitive);
}
