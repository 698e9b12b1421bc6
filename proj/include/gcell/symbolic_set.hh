#ifndef GCELL_SYMBOLIC_SET_HH
#define GCELL_SYMBOLIC_SET_HH 1

#include <gcell/vertex.hh>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gcell
{
    /**
     * A set of integers that is periodic from some threshold onwards: a finite
     * head below the threshold plus a residue pattern of the given period
     * above it. Finite unions of arithmetic progressions are exactly the sets
     * of this shape, and the normal form (least period, then least threshold)
     * is unique, so equality of sets is equality of representations.
     */
    class PeriodicSet
    {
        public:
            PeriodicSet() = default;

            static auto single(Index value) -> PeriodicSet;
            static auto progression(Index offset, Index stride) -> PeriodicSet;

            auto contains(Index value) const -> bool;
            auto empty() const -> bool;
            auto finite() const -> bool;
            auto min() const -> std::optional<Index>;

            auto threshold() const -> Index { return _threshold; }
            auto period() const -> Index { return static_cast<Index>(_tail.size()); }
            auto head() const -> const std::set<Index> & { return _head; }

            /// Offsets of the infinite progressions, each with stride period().
            auto progressions() const -> std::vector<Index>;

            /// All members <= bound, ascending.
            auto enumerate(Index bound) const -> std::vector<Index>;

            auto unite(const PeriodicSet &) const -> PeriodicSet;
            auto intersect(const PeriodicSet &) const -> PeriodicSet;
            auto minus(const PeriodicSet &) const -> PeriodicSet;

            auto operator== (const PeriodicSet &) const -> bool = default;

        private:
            std::set<Index> _head;
            Index _threshold = 0;
            std::vector<bool> _tail = {false};

            auto raised(Index threshold, Index period) const -> PeriodicSet;
            auto normalise() -> void;

            template <typename Op_>
            static auto combine(const PeriodicSet &, const PeriodicSet &, Op_ op) -> PeriodicSet;
    };

    /// {tag(fixed..., offset + stride * j) : j >= 0}, varying the last parameter.
    struct LinearFamily
    {
        std::vector<int> origin;
        Tag tag = Tag::B;
        std::vector<Index> fixed;
        Index offset = 0;
        Index stride = 1;

        static auto of(Tag tag, std::vector<Index> fixed, Index offset, Index stride) -> LinearFamily;

        /// Position of the varying parameter; always the last one.
        auto slot() const -> std::size_t { return fixed.size(); }

        auto contains(const Vertex & v) const -> bool;
        auto member(Index j) const -> Vertex;
        auto enumerate(Index bound) const -> std::vector<Vertex>;
        auto to_string() const -> std::string;

        auto operator== (const LinearFamily &) const -> bool = default;
    };

    /**
     * A finite set of vertices together with finitely many linear families.
     * Internally every indexed vertex is filed under its (origin, tag, fixed
     * parameters) group as a PeriodicSet over the last parameter; rationals
     * and identifiers are kept as loose atoms. All set operations are exact.
     */
    class SymbolicVertexSet
    {
        public:
            SymbolicVertexSet() = default;
            SymbolicVertexSet(std::initializer_list<Vertex> vertices);

            static auto of(const std::vector<Vertex> & vertices) -> SymbolicVertexSet;
            static auto of(const LinearFamily & family) -> SymbolicVertexSet;

            auto insert(const Vertex & v) -> void;
            auto insert(const LinearFamily & family) -> void;

            auto contains(const Vertex & v) const -> bool;
            auto empty() const -> bool;
            auto finite() const -> bool;

            /// Least member in vertex order.
            auto first() const -> std::optional<Vertex>;

            /// Members whose every integer parameter is <= bound (rationals and
            /// identifiers are always listed), in vertex order.
            auto enumerate(Index bound) const -> std::vector<Vertex>;

            /// Every member outside the infinite families, in vertex order.
            auto finite_members() const -> std::vector<Vertex>;

            /// The infinite part as canonical families (one per residue class).
            auto families() const -> std::vector<LinearFamily>;

            auto unite(const SymbolicVertexSet &) const -> SymbolicVertexSet;
            auto intersect(const SymbolicVertexSet &) const -> SymbolicVertexSet;
            auto minus(const SymbolicVertexSet &) const -> SymbolicVertexSet;
            auto subset_of(const SymbolicVertexSet &) const -> bool;

            /// Tag every member as coming from the given component.
            auto with_origin(int component) const -> SymbolicVertexSet;

            /// Members whose origin starts with component, with that entry removed.
            auto from_origin(int component) const -> SymbolicVertexSet;

            auto to_string() const -> std::string;

            auto operator== (const SymbolicVertexSet &) const -> bool = default;

        private:
            struct GroupKey
            {
                std::vector<int> origin;
                Tag tag;
                std::vector<Index> fixed;

                auto operator<=> (const GroupKey &) const = default;
                auto operator== (const GroupKey &) const -> bool = default;
            };

            std::set<Vertex> _loose;
            std::map<GroupKey, PeriodicSet> _groups;

            static auto key_of(const Vertex & v) -> GroupKey;
            static auto vertex_of(const GroupKey & key, Index value) -> Vertex;
            auto prune() -> void;
    };

    auto operator<< (std::ostream & s, const SymbolicVertexSet & set) -> std::ostream &;

    enum class SetComparison
    {
        Equal,
        ASubset,
        BSubset,
        Incomparable
    };

    struct SetComparisonResult
    {
        SetComparison relation;
        /// Least member of A \ B if non-empty, else least member of B \ A; absent when equal.
        std::optional<Vertex> separator;
    };

    auto compare_sets(const SymbolicVertexSet & a, const SymbolicVertexSet & b) -> SetComparisonResult;

    auto to_string(SetComparison c) -> std::string;
}

#endif
