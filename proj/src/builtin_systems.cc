#include <gcell/constructions.hh>
#include <gcell/errors.hh>

using std::string;
using std::vector;

namespace gcell
{
    namespace
    {
        class CircleSystem : public InverseSystem
        {
            public:
                CircleSystem(Index grid, bool fold) :
                    _grid(grid),
                    _fold(fold)
                {
                    if (grid < 2 || grid % 2 != 0)
                        throw ParameterError("circle grid denominator must be even and positive, got " + std::to_string(grid));

                    for (Index k = 0 ; k <= grid ; ++k)
                        _points.insert(Vertex::rational(k, grid));

                    vector<Edge> pairs;
                    for (Index k = 1 ; 2 * k < grid ; ++k)
                        pairs.emplace_back(Vertex::rational(k, grid), Vertex::rational(grid - k, grid));
                    pairs.emplace_back(Vertex::rational(0), Vertex::rational(1, 2));
                    pairs.emplace_back(Vertex::rational(1, 2), Vertex::rational(1));
                    _relation = make_relation(pairs, _points);
                }

                auto name() const -> string override
                {
                    return _fold ? "circle" : "circle-identity";
                }

                auto universe(Index) const -> SymbolicVertexSet override
                {
                    return _points;
                }

                auto relation(Index i) const -> Relation override
                {
                    check_level(i);
                    return _relation;
                }

            protected:
                auto map_down(Index, const Vertex & v) const -> Vertex override
                {
                    if (! _fold || 2 * v.params[0] < v.params[1])
                        return v;
                    return Vertex::rational(v.params[1] - v.params[0], v.params[1]);
                }

            private:
                Index _grid;
                bool _fold;
                SymbolicVertexSet _points;
                Relation _relation;
        };

        class ShrinkingSystem : public InverseSystem
        {
            public:
                auto name() const -> string override
                {
                    return "vanishing-tail";
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    return SymbolicVertexSet::of(LinearFamily::of(Tag::Dyadic, {}, i, 1));
                }

                auto relation(Index i) const -> Relation override
                {
                    return Relation::full(universe(i));
                }

                auto bond_family(Index, const LinearFamily & family) const -> SymbolicVertexSet override
                {
                    return SymbolicVertexSet::of(family);
                }

                auto preimages(Index i, const Vertex & v, Index bound) const -> vector<Vertex> override
                {
                    if (! in_universe(i, v))
                        return {};
                    Index t = v.params[0];
                    if (t >= i + 1 && t <= bound)
                        return {v};
                    return {};
                }

            protected:
                auto map_down(Index, const Vertex & v) const -> Vertex override
                {
                    return v;
                }
        };

        class StationarySystem : public InverseSystem
        {
            public:
                StationarySystem(string name, SymbolicVertexSet points, bool finite) :
                    _name(std::move(name)),
                    _points(std::move(points)),
                    _relation(finite ? make_relation(full_pairs(_points), _points) : Relation::full(_points))
                {
                }

                auto name() const -> string override
                {
                    return _name;
                }

                auto universe(Index i) const -> SymbolicVertexSet override
                {
                    check_level(i);
                    return _points;
                }

                auto relation(Index i) const -> Relation override
                {
                    check_level(i);
                    return _relation;
                }

                auto bond_family(Index, const LinearFamily & family) const -> SymbolicVertexSet override
                {
                    return SymbolicVertexSet::of(family);
                }

                auto preimages(Index i, const Vertex & v, Index bound) const -> vector<Vertex> override
                {
                    if (! in_universe(i, v))
                        return {};
                    for (auto p : v.params)
                        if (v.tag != Tag::Rational && p > bound)
                            return {};
                    return {v};
                }

            protected:
                auto map_down(Index, const Vertex & v) const -> Vertex override
                {
                    return v;
                }

            private:
                string _name;
                SymbolicVertexSet _points;
                Relation _relation;

                static auto full_pairs(const SymbolicVertexSet & points) -> vector<Edge>
                {
                    vector<Edge> pairs;
                    auto members = points.finite_members();
                    for (std::size_t x = 0 ; x < members.size() ; ++x)
                        for (std::size_t y = x + 1 ; y < members.size() ; ++y)
                            pairs.emplace_back(members[x], members[y]);
                    return pairs;
                }
        };
    }

    auto circle_system(Index grid) -> SystemPtr
    {
        return std::make_shared<CircleSystem>(grid, true);
    }

    auto circle_identity_system(Index grid) -> SystemPtr
    {
        return std::make_shared<CircleSystem>(grid, false);
    }

    auto vanishing_tail_system(VanishingReading reading, Index grid) -> SystemPtr
    {
        if (reading == VanishingReading::Shrinking)
            return std::make_shared<ShrinkingSystem>();

        if (grid < 2 || grid % 2 != 0)
            throw ParameterError("grid denominator must be even and positive, got " + std::to_string(grid));
        SymbolicVertexSet points;
        for (Index k = 1 ; 2 * k <= grid ; ++k)
            points.insert(Vertex::rational(k, grid));
        return std::make_shared<StationarySystem>("vanishing-tail-verbatim", points, true);
    }

    auto nat_full_system() -> SystemPtr
    {
        return std::make_shared<StationarySystem>("nat-full", SymbolicVertexSet::of(LinearFamily::of(Tag::Nat, {}, 1, 1)), false);
    }
}
