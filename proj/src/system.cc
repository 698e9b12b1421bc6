#include <gcell/system.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <random>

using std::optional;
using std::string;
using std::vector;

namespace gcell
{
    using std::to_string;

    auto InverseSystem::check_level(Index i) const -> void
    {
        if (i < 1)
            throw RangeError("level " + to_string(i) + " is below 1");
        if (auto n = level_count() ; n && i > *n)
            throw RangeError("level " + to_string(i) + " exceeds the " + to_string(*n) + " levels of " + name());
    }

    auto InverseSystem::in_universe(Index i, const Vertex & v) const -> bool
    {
        check_level(i);
        return universe(i).contains(v);
    }

    auto InverseSystem::bond(Index i, const Vertex & v) const -> Vertex
    {
        check_level(i);
        check_level(i + 1);
        if (! universe(i + 1).contains(v))
            throw DomainError("vertex " + v.to_string() + " is not in level " + to_string(i + 1) + " of " + name());
        return map_down(i, v);
    }

    auto InverseSystem::bond_family(Index i, const LinearFamily & family) const -> SymbolicVertexSet
    {
        throw DomainError(name() + " cannot map family " + family.to_string() + " down from level " + to_string(i + 1));
    }

    auto InverseSystem::preimages(Index i, const Vertex & v, Index bound) const -> vector<Vertex>
    {
        return brute_force_preimages(*this, i, v, bound);
    }

    auto InverseSystem::schedule(Index depth, Index breadth) const -> vector<Index>
    {
        return vector<Index>(depth, breadth);
    }

    auto brute_force_preimages(const InverseSystem & system, Index i, const Vertex & v, Index bound) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto & w : system.universe(i + 1).enumerate(bound))
            if (system.bond(i, w) == v)
                result.push_back(w);
        return result;
    }

    auto bonding_composite(const InverseSystem & system, Index i, Index j, const Vertex & v) -> Vertex
    {
        if (i > j)
            throw RangeError("composite from level " + to_string(j) + " down to " + to_string(i) + " goes upwards");
        if (! system.in_universe(j, v))
            throw DomainError("vertex " + v.to_string() + " is not in level " + to_string(j) + " of " + system.name());
        Vertex result = v;
        for (Index n = j - 1 ; n >= i ; --n)
            result = system.bond(n, result);
        return result;
    }

    auto composite_image(const InverseSystem & system, Index i, Index j, const SymbolicVertexSet & s) -> SymbolicVertexSet
    {
        if (i > j)
            throw RangeError("composite from level " + to_string(j) + " down to " + to_string(i) + " goes upwards");
        SymbolicVertexSet current = s;
        for (Index n = j - 1 ; n >= i ; --n) {
            SymbolicVertexSet next;
            for (auto & v : current.finite_members())
                next.insert(system.bond(n, v));
            for (auto & f : current.families())
                next = next.unite(system.bond_family(n, f));
            current = std::move(next);
        }
        return current;
    }

    auto Truncation::make(const InverseSystem & system, Index depth, Index breadth) -> Truncation
    {
        if (depth < 1)
            throw ParameterError("truncation depth must be at least 1");
        if (auto n = system.level_count() ; n && depth > *n)
            throw RangeError("depth " + std::to_string(depth) + " exceeds the " + std::to_string(*n) + " levels of " + system.name());
        Truncation t;
        t.depth = depth;
        t.breadth = system.schedule(depth, breadth);
        if (static_cast<Index>(t.breadth.size()) != depth)
            throw ParameterError("schedule length does not match the depth");
        return t;
    }

    auto Truncation::at(Index i) const -> Index
    {
        if (i < 1 || i > depth)
            throw RangeError("level " + std::to_string(i) + " outside truncation depth " + std::to_string(depth));
        return breadth[i - 1];
    }

    auto Truncation::to_string() const -> string
    {
        string result = "depth=" + std::to_string(depth) + " breadth=";
        for (std::size_t i = 0 ; i < breadth.size() ; ++i)
            result += (i == 0 ? "" : ",") + std::to_string(breadth[i]);
        return result;
    }

    TruncatedSystem::TruncatedSystem(SystemPtr system, Index depth, Index breadth) :
        TruncatedSystem(system, Truncation::make(*system, depth, breadth))
    {
    }

    TruncatedSystem::TruncatedSystem(SystemPtr system, Truncation truncation) :
        _system(std::move(system)),
        _truncation(std::move(truncation))
    {
        Index depth = _truncation.depth;
        if (depth < 1 || static_cast<Index>(_truncation.breadth.size()) != depth)
            throw ParameterError("malformed truncation");
        if (auto n = _system->level_count() ; n && depth > *n)
            throw RangeError("depth " + std::to_string(depth) + " exceeds the levels of " + _system->name());

        _levels.resize(depth);
        for (Index i = depth ; i >= 1 ; --i) {
            auto & level = _levels[i - 1];
            auto own = _system->universe(i).enumerate(_truncation.at(i));
            std::set<Vertex> all(own.begin(), own.end());
            if (i < depth)
                for (auto & w : _levels[i].vertices)
                    all.insert(_system->bond(i, w));
            level.padding = all.size() - own.size();
            level.vertices.assign(all.begin(), all.end());

            auto relation = _system->relation(i);
            auto sub = SymbolicVertexSet::of(level.vertices);
            vector<Edge> pairs;
            for (auto & v : level.vertices) {
                level.balls.push_back(relation.ball(v));
                for (auto & w : level.balls.back().intersect(sub).finite_members())
                    if (v < w)
                        pairs.emplace_back(v, w);
            }
            level.graph = CellularGraph{i, make_relation(pairs, sub)};
        }
    }

    auto TruncatedSystem::level_data(Index i) const -> const Level &
    {
        if (i < 1 || i > depth())
            throw RangeError("level " + std::to_string(i) + " outside truncation depth " + std::to_string(depth()));
        return _levels[i - 1];
    }

    auto TruncatedSystem::position(Index i, const Vertex & v) const -> optional<std::size_t>
    {
        auto & vs = level_data(i).vertices;
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v)
            return std::nullopt;
        return it - vs.begin();
    }

    auto TruncatedSystem::vertices(Index i) const -> const vector<Vertex> &
    {
        return level_data(i).vertices;
    }

    auto TruncatedSystem::contains(Index i, const Vertex & v) const -> bool
    {
        return position(i, v).has_value();
    }

    auto TruncatedSystem::padding(Index i) const -> std::size_t
    {
        return level_data(i).padding;
    }

    auto TruncatedSystem::ball(Index i, const Vertex & v) const -> const SymbolicVertexSet &
    {
        auto p = position(i, v);
        if (! p)
            throw DomainError("vertex " + v.to_string() + " is not in truncated level " + std::to_string(i));
        return level_data(i).balls[*p];
    }

    auto TruncatedSystem::graph(Index i) const -> const CellularGraph &
    {
        return level_data(i).graph;
    }

    auto TruncatedSystem::related(Index i, const Vertex & x, const Vertex & y) const -> bool
    {
        return ball(i, x).contains(y);
    }

    auto level(const TruncatedSystem & trunc, Index i) -> CellularGraph
    {
        return trunc.graph(i);
    }

    auto AxiomReport::passed() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CheckResult & c) { return c.passed; });
    }

    auto fnv1a(const string & text) -> std::uint64_t
    {
        std::uint64_t h = 14695981039346656037ULL;
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        return h;
    }

    namespace
    {
        auto fail(CheckResult & c, string detail, vector<Vertex> witness) -> void
        {
            c.passed = false;
            c.detail = std::move(detail);
            c.counterexample = std::move(witness);
        }

        auto level_name(Index i) -> string
        {
            return "level " + to_string(i);
        }

        constexpr std::size_t exhaustive_limit = 10000;
        constexpr std::size_t sample_count = 10000;
    }

    auto check_axioms(const TruncatedSystem & trunc, const AxiomOptions & options) -> AxiomReport
    {
        auto & sys = trunc.system();
        Index depth = trunc.depth();
        AxiomReport report{sys.name(), trunc.truncation(), {}};

        std::size_t vertex_total = 0, edge_total = 0;
        for (Index i = 1 ; i <= depth ; ++i) {
            vertex_total += trunc.vertices(i).size();
            edge_total += trunc.graph(i).relation.edges().size();
        }

        CheckResult reflexive{"reflexive", true, {}, {}};
        CheckResult symmetric{"symmetric", true, {}, {}};
        for (Index i = 1 ; i <= depth && reflexive.passed && symmetric.passed ; ++i) {
            auto sub = SymbolicVertexSet::of(trunc.vertices(i));
            for (auto & v : trunc.vertices(i)) {
                auto & b = trunc.ball(i, v);
                if (! b.contains(v)) {
                    fail(reflexive, v.to_string() + " not in its own ball at " + level_name(i), {v});
                    break;
                }
                for (auto & w : b.intersect(sub).finite_members())
                    if (! trunc.ball(i, w).contains(v)) {
                        fail(symmetric, v.to_string() + " ~ " + w.to_string() + " but not back at " + level_name(i), {v, w});
                        break;
                    }
                if (! symmetric.passed)
                    break;
            }
        }
        if (reflexive.passed)
            reflexive.detail = to_string(vertex_total) + " vertices";
        if (symmetric.passed)
            symmetric.detail = to_string(edge_total) + " edges";

        CheckResult total{"bonding-total", true, {}, {}};
        CheckResult closure{"forward-closure", true, {}, {}};
        for (Index i = 1 ; i < depth && total.passed && closure.passed ; ++i)
            for (auto & v : trunc.vertices(i + 1)) {
                optional<Vertex> image;
                try {
                    image = sys.bond(i, v);
                }
                catch (const std::exception & e) {
                    fail(total, v.to_string() + " at " + level_name(i + 1) + ": " + e.what(), {v});
                    break;
                }
                if (! sys.in_universe(i, *image)) {
                    fail(total, v.to_string() + " maps outside " + level_name(i) + " to " + image->to_string(), {v, *image});
                    break;
                }
                if (! trunc.contains(i, *image)) {
                    fail(closure, v.to_string() + " maps to " + image->to_string() + " outside truncated " + level_name(i), {v, *image});
                    break;
                }
            }
        if (total.passed)
            total.detail = to_string(depth - 1) + " maps";
        if (closure.passed)
            closure.detail = "images stay truncated";

        CheckResult composition{"composition", true, {}, {}};
        if (total.passed) {
            std::size_t largest = 0;
            for (Index i = 1 ; i <= depth ; ++i)
                largest = std::max(largest, trunc.vertices(i).size());

            auto test = [&] (Index n, Index m, Index l, const Vertex & v) -> bool {
                auto direct = bonding_composite(sys, n, l, v);
                auto split = bonding_composite(sys, n, m, bonding_composite(sys, m, l, v));
                if (direct != split) {
                    fail(composition, "g_" + to_string(n) + "^" + to_string(l) + "(" + v.to_string() + ") = " + direct.to_string()
                            + " but via level " + to_string(m) + " gives " + split.to_string(), {v, direct, split});
                    return false;
                }
                return true;
            };

            for (Index n = 1 ; n <= depth && composition.passed ; ++n)
                for (auto & v : trunc.vertices(n))
                    if (bonding_composite(sys, n, n, v) != v) {
                        fail(composition, "g_" + to_string(n) + "^" + to_string(n) + " moves " + v.to_string(), {v});
                        break;
                    }

            if (composition.passed && largest <= exhaustive_limit) {
                std::size_t triples = 0;
                for (Index l = 3 ; l <= depth && composition.passed ; ++l)
                    for (Index n = 1 ; n < l - 1 && composition.passed ; ++n)
                        for (Index m = n + 1 ; m < l && composition.passed ; ++m)
                            for (auto & v : trunc.vertices(l)) {
                                ++triples;
                                if (! test(n, m, l, v))
                                    break;
                            }
                if (composition.passed)
                    composition.detail = "exhaustive, " + to_string(triples) + " triples";
            }
            else if (composition.passed && depth >= 3) {
                std::mt19937_64 rng(options.seed.value_or(fnv1a(sys.name())));
                for (std::size_t s = 0 ; s < sample_count && composition.passed ; ++s) {
                    Index l = std::uniform_int_distribution<Index>(3, depth)(rng);
                    Index n = std::uniform_int_distribution<Index>(1, l - 2)(rng);
                    Index m = std::uniform_int_distribution<Index>(n + 1, l - 1)(rng);
                    auto & vs = trunc.vertices(l);
                    auto & v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
                    test(n, m, l, v);
                }
                if (composition.passed)
                    composition.detail = "sampled, " + to_string(sample_count) + " triples";
            }
            else if (composition.passed)
                composition.detail = "fewer than 3 levels";
        }
        else
            fail(composition, "skipped: bonding not total", {});

        CheckResult edges{"edge-preservation", true, {}, {}};
        if (total.passed && closure.passed) {
            for (Index i = 1 ; i < depth && edges.passed ; ++i)
                for (auto & [x, y] : trunc.graph(i + 1).relation.edges()) {
                    auto gx = sys.bond(i, x), gy = sys.bond(i, y);
                    if (! trunc.related(i, gx, gy)) {
                        fail(edges, "edge " + x.to_string() + " -- " + y.to_string() + " at " + level_name(i + 1)
                                + " maps to non-edge " + gx.to_string() + " -- " + gy.to_string(), {x, y});
                        break;
                    }
                }
            if (edges.passed)
                edges.detail = to_string(edge_total) + " edges";
        }
        else
            fail(edges, "skipped: bonding not total", {});

        report.checks = {reflexive, symmetric, total, closure, composition, edges};

        if (options.surjectivity) {
            CheckResult onto{"surjectivity", true, {}, {}};
            for (Index i = 1 ; i < depth && onto.passed ; ++i) {
                Index bound = 2 * trunc.breadth(i) + 2;
                for (auto & v : trunc.vertices(i))
                    if (sys.preimages(i, v, bound).empty()) {
                        fail(onto, v.to_string() + " at " + level_name(i) + " has no preimage within " + to_string(bound), {v});
                        break;
                    }
            }
            if (onto.passed)
                onto.detail = "every truncated vertex below the top has a preimage";
            report.checks.push_back(onto);
        }

        return report;
    }
}
