#include <gcell/constructions.hh>
#include <gcell/dsl.hh>
#include <gcell/errors.hh>

#include <doctest.h>

using namespace gcell;

namespace
{
    auto names(const std::vector<Vertex> & vs) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (auto & v : vs)
            result.push_back(v.to_string());
        return result;
    }
}

TEST_CASE("truncated levels")
{
    TruncatedSystem two(nonregular_system(), 2, 5);
    CHECK(names(two.vertices(2)) == std::vector<std::string>{"a_2", "b_2^1", "b_2^2", "b_2^3", "b_2^4", "b_2^5",
            "c1_2_1", "c2_2_1", "d_2^1", "d_2^2", "d_2^3", "d_2^4", "d_2^5"});
    CHECK(two.breadth(1) == 7);

    TruncatedSystem circle(circle_system(8), 3, 1);
    REQUIRE(circle.vertices(3).size() == 9);
    CHECK(circle.vertices(3).front() == Vertex::rational(0));
    CHECK(circle.vertices(3)[1] == Vertex::rational(1, 8));
    CHECK(circle.vertices(3).back() == Vertex::rational(1));

    CHECK_THROWS_AS(level(circle, 4), RangeError);
    CHECK_THROWS_AS(level(circle, 0), RangeError);
    CHECK_THROWS_AS(TruncatedSystem(circle_system(8), 0, 1), ParameterError);
    CHECK_THROWS_AS(TruncatedSystem(nonregular_system(), 6, 5), ParameterError);
}

TEST_CASE("forward closure pads lower levels")
{
    auto sys = nonregular_system();
    TruncatedSystem t(sys, 4, 4);
    for (Index i = 1 ; i < 4 ; ++i)
        for (auto & w : t.vertices(i + 1))
            CHECK(t.contains(i, sys->bond(i, w)));
    // level 2 holds nothing above K(2) = 11 except images from above
    std::size_t big = 0;
    for (auto & v : t.vertices(2))
        for (auto p : v.params)
            if (p > t.breadth(2)) {
                ++big;
                break;
            }
    CHECK(big == t.padding(2));
}

TEST_CASE("bonding composites")
{
    auto sys = nonregular_system();
    CHECK(bonding_composite(*sys, 3, 3, Vertex::b(3, 1)) == Vertex::b(3, 1));
    CHECK(bonding_composite(*sys, 3, 4, Vertex::c(2, 4, 1)) == Vertex::b(3, 3));
    CHECK(bonding_composite(*sys, 3, 4, Vertex::d(4, 3)) == Vertex::a(3));
    CHECK(sys->bond(4, Vertex::c(1, 5, 2)) == Vertex::c(1, 4, 1));
    CHECK(sys->bond(4, Vertex::c(1, 5, 8)) == Vertex::d(4, 1));
    CHECK_THROWS_AS(bonding_composite(*sys, 3, 4, Vertex::d(3, 3)), DomainError);
    CHECK_THROWS_AS(sys->bond(1, Vertex::c(1, 2, 2)), DomainError);
    CHECK_THROWS_AS(bonding_composite(*sys, 4, 3, Vertex::a(3)), RangeError);

    auto image = composite_image(*sys, 3, 5, SymbolicVertexSet::of(LinearFamily::of(Tag::D, {5}, 1, 1)));
    for (auto & v : image.enumerate(60))
        CHECK(v.params.front() == 3);
    for (Index k = 1 ; k <= 40 ; ++k)
        CHECK(image.contains(bonding_composite(*sys, 3, 5, Vertex::d(5, k))));
}

TEST_CASE("preimages of the non-regular system")
{
    auto sys = nonregular_system();
    CHECK(sys->preimages(3, Vertex::d(3, 1), 20) == std::vector<Vertex>{Vertex::c(1, 4, 5)});
    CHECK(sys->preimages(3, Vertex::a(3), 9)
            == std::vector<Vertex>{Vertex::a(4), Vertex::c(1, 4, 1), Vertex::d(4, 3), Vertex::d(4, 6), Vertex::d(4, 9)});

    // exhaustive and a section of bonding, against the brute-force oracle
    for (Index i = 1 ; i <= 6 ; ++i)
        for (Index bound : {7, 12, 25})
            for (auto & v : sys->universe(i).enumerate(20)) {
                auto fast = sys->preimages(i, v, bound);
                CHECK(fast == brute_force_preimages(*sys, i, v, bound));
                for (auto & w : fast)
                    CHECK(sys->bond(i, w) == v);
            }
}

TEST_CASE("identity systems have themselves as preimage")
{
    auto sys = circle_identity_system(8);
    CHECK(sys->preimages(2, Vertex::rational(3, 8), 0) == std::vector<Vertex>{Vertex::rational(3, 8)});
    auto fold = circle_system(8);
    CHECK(fold->preimages(1, Vertex::rational(1, 4), 0) == std::vector<Vertex>{Vertex::rational(1, 4), Vertex::rational(3, 4)});
    CHECK(fold->preimages(1, Vertex::rational(3, 4), 0).empty());
}

TEST_CASE("axiom checker")
{
    auto report = check_axioms(TruncatedSystem(nonregular_system(), 6, 20), {true, std::nullopt});
    for (auto & c : report.checks)
        CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    CHECK(report.checks.size() == 7);

    auto planted = finite_system(parse_dsl(
                "system planted\n"
                "level 1\nvertex p q\n"
                "level 2\nvertex x y\nedge x y\n"
                "map 2 1\nx -> p\ny -> q\n"));
    auto bad = check_axioms(TruncatedSystem(planted, 2, 1));
    CHECK(! bad.passed());
    bool seen = false;
    for (auto & c : bad.checks)
        if (c.name == "edge-preservation") {
            seen = true;
            CHECK(! c.passed);
            CHECK(c.counterexample == std::vector<Vertex>{Vertex::user("x"), Vertex::user("y")});
        }
    CHECK(seen);
}

TEST_CASE("composition law on every truncated vertex")
{
    auto sys = nonregular_system();
    TruncatedSystem t(sys, 5, 8);
    for (Index l = 1 ; l <= 5 ; ++l)
        for (auto & v : t.vertices(l))
            for (Index m = 1 ; m <= l ; ++m)
                for (Index n = 1 ; n <= m ; ++n)
                    CHECK(bonding_composite(*sys, n, m, bonding_composite(*sys, m, l, v)) == bonding_composite(*sys, n, l, v));
}

TEST_CASE("seeded sampling is reproducible")
{
    auto t = TruncatedSystem(circle_system(16), 6, 1);
    auto a = check_axioms(t, {false, 7});
    auto b = check_axioms(t, {false, 7});
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t c = 0 ; c < a.checks.size() ; ++c)
        CHECK(a.checks[c].detail == b.checks[c].detail);
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
