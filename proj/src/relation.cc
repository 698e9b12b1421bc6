#include <gcell/relation.hh>
#include <gcell/errors.hh>

using std::shared_ptr;
using std::vector;

namespace gcell
{
    auto BallOracle::ball_of_family(const LinearFamily & family) const -> SymbolicVertexSet
    {
        throw DomainError("relation cannot take the ball of family " + family.to_string());
    }

    namespace
    {
        class FullOracle : public BallOracle
        {
            public:
                explicit FullOracle(SymbolicVertexSet universe) :
                    _universe(std::move(universe))
                {
                }

                auto ball(const Vertex &) const -> SymbolicVertexSet override
                {
                    return _universe;
                }

                auto ball_of_family(const LinearFamily &) const -> SymbolicVertexSet override
                {
                    return _universe;
                }

            private:
                SymbolicVertexSet _universe;
        };
    }

    auto Relation::explicit_pairs(const vector<Edge> & pairs, SymbolicVertexSet universe) -> Relation
    {
        Relation r;
        r._universe = std::move(universe);
        for (auto & [x, y] : pairs) {
            r.require_member(x);
            r.require_member(y);
            if (x == y)
                continue;
            r._adjacent[x].insert(y);
            r._adjacent[y].insert(x);
        }
        return r;
    }

    auto Relation::from_oracle(shared_ptr<const BallOracle> oracle, SymbolicVertexSet universe) -> Relation
    {
        Relation r;
        r._universe = std::move(universe);
        r._oracle = std::move(oracle);
        return r;
    }

    auto Relation::full(SymbolicVertexSet universe) -> Relation
    {
        auto oracle = std::make_shared<FullOracle>(universe);
        return from_oracle(std::move(oracle), std::move(universe));
    }

    auto Relation::require_member(const Vertex & v) const -> void
    {
        if (! _universe.contains(v))
            throw DomainError("vertex " + v.to_string() + " is not in the universe");
    }

    auto Relation::related(const Vertex & x, const Vertex & y) const -> bool
    {
        return ball(x).contains(y);
    }

    auto Relation::edges() const -> vector<Edge>
    {
        if (_oracle)
            throw DomainError("edges of an oracle relation are not enumerable; restrict it first");
        vector<Edge> result;
        for (auto & [x, ys] : _adjacent)
            for (auto & y : ys)
                if (x < y)
                    result.emplace_back(x, y);
        return result;
    }

    auto Relation::restricted_to(const vector<Vertex> & vertices) const -> Relation
    {
        auto sub = SymbolicVertexSet::of(vertices);
        vector<Edge> pairs;
        for (auto & x : vertices)
            for (auto & y : ball(x).intersect(sub).finite_members())
                if (x < y)
                    pairs.emplace_back(x, y);
        return explicit_pairs(pairs, sub);
    }

    auto Relation::ball(const Vertex & v) const -> SymbolicVertexSet
    {
        require_member(v);
        if (_oracle)
            return _oracle->ball(v);
        SymbolicVertexSet result{v};
        if (auto a = _adjacent.find(v) ; a != _adjacent.end())
            for (auto & w : a->second)
                result.insert(w);
        return result;
    }

    auto Relation::ball_set(const SymbolicVertexSet & s) const -> SymbolicVertexSet
    {
        auto outside = s.minus(_universe);
        if (! outside.empty())
            throw DomainError("vertex " + outside.first()->to_string() + " is not in the universe");

        if (_oracle) {
            SymbolicVertexSet result;
            for (auto & v : s.finite_members())
                result = result.unite(_oracle->ball(v));
            for (auto & f : s.families())
                result = result.unite(_oracle->ball_of_family(f));
            return result;
        }

        // explicit: every member contributes itself, only finitely many contribute more
        SymbolicVertexSet result = s;
        for (auto & [x, ys] : _adjacent)
            if (s.contains(x))
                for (auto & y : ys)
                    result.insert(y);
        return result;
    }

    auto make_relation(const vector<Edge> & pairs, const SymbolicVertexSet & universe) -> Relation
    {
        return Relation::explicit_pairs(pairs, universe);
    }

    auto ball(const Vertex & v, const Relation & r) -> SymbolicVertexSet
    {
        return r.ball(v);
    }

    auto ball_set(const SymbolicVertexSet & s, const Relation & r) -> SymbolicVertexSet
    {
        return r.ball_set(s);
    }

    auto two_ball(const Vertex & v, const Relation & r) -> SymbolicVertexSet
    {
        return r.ball_set(r.ball(v));
    }

    auto is_transitive_on(const Relation & r, Index bound) -> TransitivityResult
    {
        if (bound <= 0)
            return {};
        for (auto & x : r.universe().enumerate(bound)) {
            auto near = r.ball(x);
            auto extra = r.ball_set(near).minus(near);
            if (extra.empty())
                continue;
            auto z = *extra.first();
            auto y = *near.intersect(r.ball(z)).first();
            return {false, std::array<Vertex, 3>{x, y, z}};
        }
        return {};
    }
}
