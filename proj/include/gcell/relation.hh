#ifndef GCELL_RELATION_HH
#define GCELL_RELATION_HH 1

#include <gcell/symbolic_set.hh>

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gcell
{
    /**
     * Closed-form neighbourhoods for relations on infinite universes. An
     * oracle must be symmetric and must answer for whole families too, since
     * two_ball feeds every ball back through ball_set.
     */
    class BallOracle
    {
        public:
            virtual ~BallOracle() = default;

            virtual auto ball(const Vertex & v) const -> SymbolicVertexSet = 0;

            /// Union of the balls of every member. Throws DomainError unless overridden.
            virtual auto ball_of_family(const LinearFamily & family) const -> SymbolicVertexSet;
    };

    using Edge = std::pair<Vertex, Vertex>;

    /// A reflexive symmetric relation on a symbolic universe.
    class Relation
    {
        public:
            /// The empty relation on the empty universe.
            Relation() = default;

            static auto explicit_pairs(const std::vector<Edge> & pairs, SymbolicVertexSet universe) -> Relation;
            static auto from_oracle(std::shared_ptr<const BallOracle> oracle, SymbolicVertexSet universe) -> Relation;

            /// Every vertex related to every other one.
            static auto full(SymbolicVertexSet universe) -> Relation;

            auto universe() const -> const SymbolicVertexSet & { return _universe; }
            auto is_explicit() const -> bool { return ! _oracle; }

            auto related(const Vertex & x, const Vertex & y) const -> bool;

            /// Non-diagonal pairs (x, y) with x < y; explicit relations only.
            auto edges() const -> std::vector<Edge>;

            /// The explicit relation induced on a finite subset of the universe.
            auto restricted_to(const std::vector<Vertex> & vertices) const -> Relation;

            auto ball(const Vertex & v) const -> SymbolicVertexSet;
            auto ball_set(const SymbolicVertexSet & s) const -> SymbolicVertexSet;

        private:
            SymbolicVertexSet _universe;
            std::shared_ptr<const BallOracle> _oracle;
            std::map<Vertex, std::set<Vertex>> _adjacent;

            auto require_member(const Vertex & v) const -> void;
    };

    /// Smallest reflexive symmetric relation on universe containing pairs.
    auto make_relation(const std::vector<Edge> & pairs, const SymbolicVertexSet & universe) -> Relation;

    auto ball(const Vertex & v, const Relation & r) -> SymbolicVertexSet;
    auto ball_set(const SymbolicVertexSet & s, const Relation & r) -> SymbolicVertexSet;

    /// B(v, 2r): everything reachable by a path of length at most two.
    auto two_ball(const Vertex & v, const Relation & r) -> SymbolicVertexSet;

    struct TransitivityResult
    {
        bool transitive = true;
        /// (x, y, z) with x r y, y r z and not x r z.
        std::optional<std::array<Vertex, 3>> witness;
    };

    /// Checks B(x, 2r) = B(x, r) for every universe member with parameters <= bound.
    auto is_transitive_on(const Relation & r, Index bound) -> TransitivityResult;
}

#endif
