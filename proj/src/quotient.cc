#include <gcell/quotient.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using std::map;
using std::optional;
using std::set;
using std::string;
using std::vector;

namespace gcell
{
    DisjointSet::DisjointSet(std::size_t n) :
        _parent(n),
        _rank(n, 0)
    {
        std::iota(_parent.begin(), _parent.end(), 0);
    }

    auto DisjointSet::find(std::size_t x) -> std::size_t
    {
        while (_parent[x] != x) {
            _parent[x] = _parent[_parent[x]];
            x = _parent[x];
        }
        return x;
    }

    auto DisjointSet::unite(std::size_t x, std::size_t y) -> bool
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (_rank[x] < _rank[y])
            std::swap(x, y);
        _parent[y] = x;
        if (_rank[x] == _rank[y])
            ++_rank[x];
        return true;
    }

    auto Partition::block_of(const ThreadPrefix & p) const -> optional<std::size_t>
    {
        for (std::size_t b = 0 ; b < blocks.size() ; ++b)
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), p))
                return b;
        return std::nullopt;
    }

    auto Partition::prefix_count() const -> std::size_t
    {
        std::size_t n = 0;
        for (auto & b : blocks)
            n += b.size();
        return n;
    }

    auto quotient_at_depth(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options) -> Partition
    {
        auto all = enumerate_threads(trunc, depth, options);
        RelatednessMatrix r(trunc, all);
        DisjointSet sets(all.size());
        for (std::size_t x = 0 ; x < all.size() ; ++x)
            for (std::size_t y = x + 1 ; y < all.size() ; ++y)
                if (r(x, y))
                    sets.unite(x, y);

        // all is ascending, so blocks come out ordered by least member
        map<std::size_t, std::size_t> block_index;
        Partition result;
        result.depth = depth;
        for (std::size_t x = 0 ; x < all.size() ; ++x) {
            auto [it, fresh] = block_index.emplace(sets.find(x), result.blocks.size());
            if (fresh)
                result.blocks.emplace_back();
            result.blocks[it->second].push_back(all[x]);
        }
        return result;
    }

    namespace
    {
        class LevelQuotient : public InverseSystem
        {
            public:
                LevelQuotient(string name, vector<SymbolicVertexSet> classes, vector<map<Vertex, Vertex>> down) :
                    _name(std::move(name)),
                    _classes(std::move(classes)),
                    _down(std::move(down))
                {
                }

                auto name() const -> string override
                {
                    return _name;
                }

                auto level_count() const -> optional<Index> override
                {
                    return static_cast<Index>(_classes.size());
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    return _classes[i - 1];
                }

                auto relation(Index i) const -> Relation override
                {
                    return make_relation({}, universe(i));
                }

            protected:
                auto map_down(Index i, const Vertex & v) const -> Vertex override
                {
                    return _down[i - 1].at(v);
                }

            private:
                string _name;
                vector<SymbolicVertexSet> _classes;
                vector<map<Vertex, Vertex>> _down;
        };

        // representative of every truncated vertex at level i, after checking transitivity
        auto representatives(const TruncatedSystem & trunc, Index i) -> map<Vertex, Vertex>
        {
            auto & r = trunc.graph(i).relation;
            auto & vs = trunc.vertices(i);
            map<Vertex, Vertex> rep;
            for (auto & x : vs) {
                auto near = r.ball(x);
                for (auto & y : near.finite_members())
                    for (auto & z : r.ball(y).finite_members())
                        if (! near.contains(z))
                            throw PreconditionError("level " + to_string(i) + " is not transitive: " + x.to_string() + " ~ "
                                    + y.to_string() + " ~ " + z.to_string() + " but " + x.to_string() + " !~ " + z.to_string());
                rep.emplace(x, *near.first());
            }
            return rep;
        }
    }

    auto level_quotient_system(const TruncatedSystem & trunc) -> SystemPtr
    {
        auto & sys = trunc.system();
        Index depth = trunc.depth();
        vector<map<Vertex, Vertex>> reps;
        for (Index i = 1 ; i <= depth ; ++i)
            reps.push_back(representatives(trunc, i));

        vector<SymbolicVertexSet> classes(depth);
        for (Index i = 1 ; i <= depth ; ++i)
            for (auto & [v, rep] : reps[i - 1])
                classes[i - 1].insert(rep);

        vector<map<Vertex, Vertex>> down(depth > 0 ? depth - 1 : 0);
        for (Index i = 1 ; i < depth ; ++i)
            for (auto & [v, rep] : reps[i]) {
                auto image = reps[i - 1].at(sys.bond(i, v));
                auto [it, fresh] = down[i - 1].emplace(rep, image);
                if (! fresh && it->second != image)
                    throw PreconditionError("induced map at level " + to_string(i + 1) + " is not well defined: " + rep.to_string()
                            + " ~ " + v.to_string() + " map to classes " + it->second.to_string() + " and " + image.to_string());
            }

        return std::make_shared<LevelQuotient>("levelq(" + sys.name() + ")", std::move(classes), std::move(down));
    }

    auto compare_quotients(const TruncatedSystem & trunc, Index depth) -> QuotientComparison
    {
        if (depth < 1 || depth > trunc.depth())
            throw RangeError("depth " + to_string(depth) + " outside truncation depth " + to_string(trunc.depth()));

        auto & sys = trunc.system();
        auto quotient = level_quotient_system(trunc);
        Index top = trunc.depth();

        // a top class lives on if anything in the full class has a preimage
        set<Vertex> live;
        Index bound = 2 * trunc.breadth(top) + 2;
        auto count = sys.level_count();
        for (auto & rep : quotient->universe(top).finite_members()) {
            bool alive = count && top == *count;
            for (auto & v : sys.relation(top).ball(rep).enumerate(bound)) {
                if (alive)
                    break;
                alive = ! sys.preimages(top, v, bound).empty();
            }
            if (alive)
                live.insert(rep);
        }
        for (Index i = top - 1 ; i >= depth ; --i) {
            set<Vertex> below;
            for (auto & v : live)
                below.insert(quotient->bond(i, v));
            live = std::move(below);
        }

        auto partition = quotient_at_depth(trunc, depth);
        QuotientComparison result;
        result.depth = depth;
        result.gstar_classes = partition.blocks.size();
        result.levelq_threads = live.size();
        if (result.equal())
            result.witness = "both sides have " + to_string(result.gstar_classes) + " points at depth " + to_string(depth);
        else {
            result.witness = to_string(result.gstar_classes) + " closure classes of prefixes against "
                + to_string(result.levelq_threads) + " threads of level quotients";
            if (! partition.blocks.empty())
                result.witness += "; first class " + partition.blocks.front().front().to_string();
            if (! live.empty())
                result.witness += "; first level class " + live.begin()->to_string();
        }
        return result;
    }
}
