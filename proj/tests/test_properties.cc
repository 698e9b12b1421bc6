#include <gcell/constructions.hh>
#include <gcell/dsl.hh>
#include <gcell/quotient.hh>

#include <doctest.h>

#include <random>
#include <set>

using namespace gcell;

namespace
{
    constexpr int instances = 120;

    auto names(Index level, std::size_t n) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (std::size_t k = 0 ; k < n ; ++k)
            result.push_back("v" + std::to_string(level) + "_" + std::to_string(k));
        return result;
    }

    auto random_description(std::mt19937_64 & rng, bool preserve_edges) -> SystemDescription
    {
        SystemDescription d;
        d.name = "random" + std::to_string(rng() % 1000);
        std::size_t depth = 1 + rng() % 4;
        for (std::size_t i = 1 ; i <= depth ; ++i) {
            SystemDescription::Level level;
            level.vertices = names(i, 1 + rng() % 5);
            for (std::size_t x = 0 ; x < level.vertices.size() ; ++x)
                for (std::size_t y = x + 1 ; y < level.vertices.size() ; ++y)
                    if (rng() % 3 == 0)
                        level.edges.emplace_back(std::minmax(level.vertices[x], level.vertices[y]));
            if (i > 1) {
                std::map<std::string, std::string> m;
                auto & below = d.levels.back().vertices;
                for (auto & v : level.vertices)
                    m[v] = below[rng() % below.size()];
                if (preserve_edges) {
                    // keep only edges whose images are related below
                    std::set<std::pair<std::string, std::string>> lower(d.levels.back().edges.begin(), d.levels.back().edges.end());
                    std::erase_if(level.edges, [&] (auto & e) {
                        auto a = m[e.first], b = m[e.second];
                        return a != b && ! lower.contains(std::minmax(a, b));
                    });
                }
                d.maps.push_back(m);
            }
            d.levels.push_back(level);
        }
        return d;
    }

    auto random_universe(std::mt19937_64 & rng, std::size_t n) -> std::vector<Vertex>
    {
        std::vector<Vertex> vs;
        for (auto & name : names(1, n))
            vs.push_back(Vertex::user(name));
        (void) rng;
        return vs;
    }

    auto random_pairs(std::mt19937_64 & rng, const std::vector<Vertex> & vs, int one_in) -> std::vector<Edge>
    {
        std::vector<Edge> pairs;
        for (auto & x : vs)
            for (auto & y : vs)
                if (rng() % one_in == 0)
                    pairs.emplace_back(x, y);
        return pairs;
    }
}

TEST_CASE("closure is the least reflexive symmetric relation containing the pairs")
{
    std::mt19937_64 rng(1);
    for (int n = 0 ; n < instances ; ++n) {
        auto vs = random_universe(rng, 1 + rng() % 6);
        auto pairs = random_pairs(rng, vs, 4);
        auto r = make_relation(pairs, SymbolicVertexSet::of(vs));

        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t x = 0 ; x < vs.size() ; ++x)
            for (std::size_t y = x + 1 ; y < vs.size() ; ++y)
                slots.emplace_back(x, y);
        auto holds = [&] (unsigned mask, const Vertex & a, const Vertex & b) {
            if (a == b)
                return true;
            for (std::size_t s = 0 ; s < slots.size() ; ++s)
                if ((mask >> s & 1) && ((vs[slots[s].first] == a && vs[slots[s].second] == b) || (vs[slots[s].first] == b && vs[slots[s].second] == a)))
                    return true;
            return false;
        };
        // brute force: intersect every candidate relation containing the pairs
        unsigned least = (1u << slots.size()) - 1;
        for (unsigned mask = 0 ; mask < (1u << slots.size()) ; ++mask) {
            bool contains = std::all_of(pairs.begin(), pairs.end(), [&] (auto & p) { return holds(mask, p.first, p.second); });
            if (contains)
                least &= mask;
        }
        for (auto & x : vs)
            for (auto & y : vs)
                CHECK(r.related(x, y) == holds(least, x, y));
    }
}

TEST_CASE("balls grow with the relation and membership is symmetric")
{
    std::mt19937_64 rng(2);
    for (int n = 0 ; n < instances ; ++n) {
        auto vs = random_universe(rng, 1 + rng() % 8);
        auto universe = SymbolicVertexSet::of(vs);
        auto small = random_pairs(rng, vs, 5);
        auto big = small;
        for (auto & p : random_pairs(rng, vs, 4))
            big.push_back(p);
        auto r = make_relation(small, universe), s = make_relation(big, universe);
        for (auto & v : vs) {
            CHECK(r.ball(v).subset_of(s.ball(v)));
            CHECK(r.ball(v).subset_of(two_ball(v, r)));
            for (auto & u : vs) {
                CHECK(r.ball(v).contains(u) == r.ball(u).contains(v));
                CHECK(s.ball(v).contains(u) == s.ball(u).contains(v));
            }
        }
    }
}

TEST_CASE("deeper partitions refine shallower ones on random systems")
{
    std::mt19937_64 rng(3);
    for (int n = 0 ; n < instances ; ++n) {
        auto sys = finite_system(random_description(rng, false));
        Index depth = 1 + static_cast<Index>(rng() % 4);
        TruncatedSystem t(sys, depth + 1, 1);
        for (Index k = 1 ; k <= depth ; ++k) {
            auto shallow = quotient_at_depth(t, k);
            auto deep = quotient_at_depth(t, k + 1);
            for (auto & block : deep.blocks) {
                auto first = shallow.block_of(block.front().restricted(k));
                REQUIRE(first);
                for (auto & p : block)
                    CHECK(shallow.block_of(p.restricted(k)) == first);
            }
        }
    }
}

TEST_CASE("preimages are sections of bonding and miss nothing")
{
    std::mt19937_64 rng(4);
    for (int n = 0 ; n < instances ; ++n) {
        auto d = random_description(rng, true);
        auto sys = finite_system(d);
        Index levels = static_cast<Index>(d.levels.size()) + 1;
        for (Index i = 1 ; i < levels ; ++i) {
            auto upper = sys->universe(i + 1).enumerate(0);
            std::size_t found = 0;
            for (auto & v : sys->universe(i).enumerate(0)) {
                auto pre = sys->preimages(i, v, 0);
                CHECK(pre == brute_force_preimages(*sys, i, v, 0));
                CHECK(std::is_sorted(pre.begin(), pre.end()));
                for (auto & w : pre)
                    CHECK(sys->bond(i, w) == v);
                found += pre.size();
            }
            CHECK(found == upper.size());
        }
        CHECK(check_axioms(TruncatedSystem(sys, levels, 1)).passed());
    }
}

TEST_CASE("DSL round trip on random descriptions")
{
    std::mt19937_64 rng(5);
    for (int n = 0 ; n < instances ; ++n) {
        auto d = random_description(rng, rng() % 2 == 0);
        auto text = render_dsl(d);
        auto back = parse_dsl(text);
        CHECK(back == d);
        CHECK(render_dsl(back) == text);
    }
}
