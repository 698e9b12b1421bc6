#include <gcell/constructions.hh>
#include <gcell/dsl.hh>
#include <gcell/quotient.hh>

#include <doctest.h>

#include <algorithm>

using namespace gcell;

namespace
{
    auto constant(const Vertex & v, Index depth) -> ThreadPrefix
    {
        return ThreadPrefix{std::vector<Vertex>(depth, v)};
    }

    auto toy3() -> SystemPtr
    {
        return finite_system(load_dsl_file("tests/data/toy3.sys"));
    }
}

TEST_CASE("disjoint set")
{
    DisjointSet d(5);
    CHECK(d.unite(0, 3));
    CHECK(! d.unite(3, 0));
    CHECK(d.unite(4, 3));
    CHECK(d.find(4) == d.find(0));
    CHECK(d.find(1) != d.find(0));
    CHECK(d.find(2) == 2);
}

TEST_CASE("circle quotient")
{
    TruncatedSystem t(circle_system(16), 4, 1);
    auto q = quotient_at_depth(t, 4);
    CHECK(q.depth == 4);
    CHECK(q.prefix_count() == 9);
    REQUIRE(q.blocks.size() == 8);
    CHECK(q.blocks[0] == std::vector<ThreadPrefix>{constant(Vertex::rational(0), 4), constant(Vertex::rational(1, 2), 4)});
    for (std::size_t b = 1 ; b < q.blocks.size() ; ++b)
        CHECK(q.blocks[b].size() == 1);
    CHECK(q.block_of(constant(Vertex::rational(1, 2), 4)) == 0u);
    CHECK(! q.block_of(constant(Vertex::rational(3, 4), 4)));
}

TEST_CASE("full relation collapses to one class")
{
    auto sys = finite_system(parse_dsl("system full\nlevel 1\nvertex p q s\nedge p q\nedge q s\nedge p s\n"));
    TruncatedSystem t(sys, 3, 1);
    auto q = quotient_at_depth(t, 3);
    CHECK(q.blocks.size() == 1);
    CHECK(q.prefix_count() == 3);

    TruncatedSystem t3(toy3(), 3, 1);
    auto p = quotient_at_depth(t3, 3);
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0].size() == 2);
}

TEST_CASE("deeper partitions refine shallower ones")
{
    for (auto & t : {TruncatedSystem(nonregular_system(), 4, 5), TruncatedSystem(circle_system(8), 4, 1), TruncatedSystem(toy3(), 4, 1)})
        for (Index n = 1 ; n < 4 ; ++n) {
            auto shallow = quotient_at_depth(t, n);
            auto deep = quotient_at_depth(t, n + 1);
            for (auto & block : deep.blocks) {
                auto first = shallow.block_of(block.front().restricted(n));
                REQUIRE(first);
                for (auto & p : block)
                    CHECK(shallow.block_of(p.restricted(n)) == first);
            }
        }
}

TEST_CASE("level quotient systems")
{
    TruncatedSystem tail(vanishing_tail_system(), 6, 6);
    auto lq = level_quotient_system(tail);
    CHECK(lq->name() == "levelq(vanishing-tail)");
    CHECK(lq->level_count() == Index{6});
    for (Index i = 1 ; i <= 6 ; ++i) {
        auto all = lq->universe(i).enumerate(1'000);
        CHECK(all == std::vector<Vertex>{tail.vertices(i).front()});
    }

    TruncatedSystem t3(toy3(), 2, 1);
    auto q3 = level_quotient_system(t3);
    auto r = q3->relation(1);
    auto vs = q3->universe(1).enumerate(100);
    CHECK(vs == std::vector<Vertex>{Vertex::user("p"), Vertex::user("s")});
    CHECK(r.related(vs[0], vs[0]));
    CHECK(! r.related(vs[0], vs[1]));
    CHECK(q3->bond(1, Vertex::user("s")) == Vertex::user("s"));

    TruncatedSystem circle(circle_system(8), 3, 1);
    CHECK_THROWS_AS(level_quotient_system(circle), PreconditionError);
}

TEST_CASE("comparing the two quotients")
{
    auto tail = compare_quotients(TruncatedSystem(vanishing_tail_system(), 6, 6), 6);
    CHECK(tail.gstar_classes == 0);
    CHECK(tail.levelq_threads == 1);
    CHECK(! tail.equal());
    CHECK(! tail.witness.empty());

    auto toy = compare_quotients(TruncatedSystem(toy3(), 3, 1), 3);
    CHECK(toy.gstar_classes == 2);
    CHECK(toy.levelq_threads == 2);
    CHECK(toy.equal());

    auto nat = compare_quotients(TruncatedSystem(nat_full_system(), 4, 10), 4);
    CHECK(nat.levelq_threads == 1);
}
