#include <gcell/constructions.hh>
#include <gcell/errors.hh>

#include <algorithm>
#include <set>

using std::string;
using std::vector;

namespace gcell
{
    auto collapse_indices(const InverseSystem & system, const ThreadPrefix & base, Index count, Index budget) -> vector<Index>
    {
        if (! is_consistent(system, base))
            throw UsageError("base prefix " + base.to_string() + " is not consistent");
        Index limit = std::min(budget, base.depth());
        vector<Index> result;
        Index previous = 1;
        for (Index t = 1 ; t <= count ; ++t) {
            auto target = system.relation(previous).ball(base.at(previous));
            Index found = 0;
            for (Index j = previous + 1 ; j <= limit && ! found ; ++j) {
                auto image = composite_image(system, previous, j, two_ball(base.at(j), system.relation(j)));
                if (image.subset_of(target))
                    found = j;
            }
            if (! found)
                throw ResourceError("collapse index " + to_string(t) + " of " + system.name() + " not found up to level " + to_string(limit),
                        result.size());
            result.push_back(found);
            previous = found;
        }
        return result;
    }

    namespace
    {
        struct Part
        {
            SystemPtr system;
            ThreadPrefix base;
            vector<Index> levels;
        };

        auto family_from(const LinearFamily & f) -> LinearFamily
        {
            auto inner = f;
            inner.origin.erase(inner.origin.begin());
            return inner;
        }

        class WedgeBalls : public BallOracle
        {
            public:
                WedgeBalls(vector<Relation> relations, SymbolicVertexSet glue) :
                    _relations(std::move(relations)),
                    _glue(std::move(glue))
                {
                }

                auto ball(const Vertex & v) const -> SymbolicVertexSet override
                {
                    auto k = component(v.origin);
                    auto result = _relations[k].ball(v.without_origin()).with_origin(static_cast<int>(k) + 1);
                    if (_glue.contains(v))
                        result = result.unite(_glue);
                    return result;
                }

                auto ball_of_family(const LinearFamily & f) const -> SymbolicVertexSet override
                {
                    auto k = component(f.origin);
                    auto family = SymbolicVertexSet::of(f);
                    auto result = _relations[k].ball_set(family.from_origin(static_cast<int>(k) + 1)).with_origin(static_cast<int>(k) + 1);
                    if (! family.intersect(_glue).empty())
                        result = result.unite(_glue);
                    return result;
                }

            private:
                vector<Relation> _relations;
                SymbolicVertexSet _glue;

                auto component(const vector<int> & origin) const -> std::size_t
                {
                    if (origin.empty() || origin.front() < 1 || static_cast<std::size_t>(origin.front()) > _relations.size())
                        throw DomainError("vertex does not belong to any wedge component");
                    return origin.front() - 1;
                }
        };

        class WedgeSystem : public InverseSystem
        {
            public:
                WedgeSystem(vector<Part> parts, Index count, string name) :
                    _parts(std::move(parts)),
                    _count(count),
                    _name(std::move(name))
                {
                }

                auto name() const -> string override
                {
                    return _name;
                }

                auto level_count() const -> std::optional<Index> override
                {
                    return _count;
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    SymbolicVertexSet result;
                    for (std::size_t k = 0 ; k < _parts.size() ; ++k)
                        result = result.unite(_parts[k].system->universe(at(k, i)).with_origin(tag(k)));
                    return result;
                }

                auto relation(Index i) const -> Relation override
                {
                    check_level(i);
                    vector<Relation> relations;
                    SymbolicVertexSet glue;
                    for (std::size_t k = 0 ; k < _parts.size() ; ++k) {
                        Index j = at(k, i);
                        relations.push_back(_parts[k].system->relation(j));
                        glue = glue.unite(relations.back().ball(_parts[k].base.at(j)).with_origin(tag(k)));
                    }
                    return Relation::from_oracle(std::make_shared<WedgeBalls>(std::move(relations), std::move(glue)), universe(i));
                }

                auto bond_family(Index i, const LinearFamily & f) const -> SymbolicVertexSet override
                {
                    auto k = component(f.origin);
                    auto inner = SymbolicVertexSet::of(family_from(f));
                    return composite_image(*_parts[k].system, at(k, i), at(k, i + 1), inner).with_origin(tag(k));
                }

                auto preimages(Index i, const Vertex & v, Index bound) const -> vector<Vertex> override
                {
                    check_level(i + 1);
                    if (! in_universe(i, v))
                        return {};
                    auto k = component(v.origin);
                    auto & sys = *_parts[k].system;
                    std::set<Vertex> current{v.without_origin()};
                    for (Index m = at(k, i) ; m < at(k, i + 1) ; ++m) {
                        std::set<Vertex> next;
                        for (auto & w : current)
                            for (auto & u : sys.preimages(m, w, bound))
                                next.insert(u);
                        current = std::move(next);
                    }
                    vector<Vertex> result;
                    for (auto & w : current)
                        result.push_back(w.with_origin(tag(k)));
                    std::sort(result.begin(), result.end());
                    return result;
                }

            protected:
                auto map_down(Index i, const Vertex & v) const -> Vertex override
                {
                    auto k = component(v.origin);
                    return bonding_composite(*_parts[k].system, at(k, i), at(k, i + 1), v.without_origin()).with_origin(tag(k));
                }

            private:
                vector<Part> _parts;
                Index _count;
                string _name;

                auto at(std::size_t k, Index i) const -> Index
                {
                    return _parts[k].levels.at(i - 1);
                }

                static auto tag(std::size_t k) -> int
                {
                    return static_cast<int>(k) + 1;
                }

                auto component(const vector<int> & origin) const -> std::size_t
                {
                    if (origin.empty() || origin.front() < 1 || static_cast<std::size_t>(origin.front()) > _parts.size())
                        throw DomainError("vertex does not belong to any wedge component");
                    return origin.front() - 1;
                }
        };
    }

    auto wedge_combine(const vector<WedgeComponent> & components, Index count, Index budget, const string & name) -> SystemPtr
    {
        if (components.empty())
            throw ParameterError("a wedge needs at least one component");
        if (count < 1)
            throw ParameterError("a wedge needs at least one level");
        vector<Part> parts;
        for (auto & c : components)
            parts.push_back(Part{c.system, c.base, collapse_indices(*c.system, c.base, count, budget)});
        return std::make_shared<WedgeSystem>(std::move(parts), count, name);
    }

    auto default_base(const SystemPtr & system, Index budget, Index breadth) -> ThreadPrefix
    {
        TruncatedSystem trunc(system, budget, breadth);
        auto all = enumerate_threads(trunc, budget);
        if (all.empty())
            throw ResourceError(system->name() + " has no live prefix of depth " + to_string(budget), 0);
        return all.front();
    }
}
