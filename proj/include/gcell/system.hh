#ifndef GCELL_SYSTEM_HH
#define GCELL_SYSTEM_HH 1

#include <gcell/relation.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcell
{
    struct CellularGraph
    {
        Index level = 1;
        Relation relation;
    };

    /**
     * An inverse sequence of cellular graphs, levels numbered from 1. bond(i, v)
     * maps level i + 1 down to level i; subclasses supply map_down and may
     * override preimages with something faster than the brute-force default.
     */
    class InverseSystem
    {
        public:
            virtual ~InverseSystem() = default;

            virtual auto name() const -> std::string = 0;

            /// Number of levels, or nullopt for an infinite sequence.
            virtual auto level_count() const -> std::optional<Index> { return std::nullopt; }

            virtual auto universe(Index i) const -> SymbolicVertexSet = 0;
            virtual auto relation(Index i) const -> Relation = 0;

            auto in_universe(Index i, const Vertex & v) const -> bool;

            /// The bonding map from level i + 1 to level i. Throws DomainError off the universe.
            auto bond(Index i, const Vertex & v) const -> Vertex;

            /// Image of a whole family under bond(i, .). Throws DomainError unless overridden.
            virtual auto bond_family(Index i, const LinearFamily & family) const -> SymbolicVertexSet;

            /// Level i + 1 vertices with parameters <= bound mapping to v, ascending.
            virtual auto preimages(Index i, const Vertex & v, Index bound) const -> std::vector<Vertex>;

            /// Per-level parameter bounds K(1..depth) for a truncation with top breadth.
            virtual auto schedule(Index depth, Index breadth) const -> std::vector<Index>;

        protected:
            virtual auto map_down(Index i, const Vertex & v) const -> Vertex = 0;

            auto check_level(Index i) const -> void;
    };

    using SystemPtr = std::shared_ptr<const InverseSystem>;

    /// Enumerate level i + 1 within bound and keep what maps to v.
    auto brute_force_preimages(const InverseSystem & system, Index i, const Vertex & v, Index bound) -> std::vector<Vertex>;

    /// g_i^j(v) for v at level j, by j - i single steps.
    auto bonding_composite(const InverseSystem & system, Index i, Index j, const Vertex & v) -> Vertex;

    /// g_i^j applied to a symbolic level-j set.
    auto composite_image(const InverseSystem & system, Index i, Index j, const SymbolicVertexSet & s) -> SymbolicVertexSet;

    struct Truncation
    {
        Index depth = 1;
        /// breadth[i - 1] bounds the parameters at level i.
        std::vector<Index> breadth;

        static auto make(const InverseSystem & system, Index depth, Index breadth) -> Truncation;

        auto at(Index i) const -> Index;
        auto to_string() const -> std::string;
    };

    /**
     * The finite picture of a system under a truncation: level i holds every
     * level-i vertex within K(i) plus the images of level i + 1, so bonding
     * never leaves the truncation. Built once at construction and immutable
     * afterwards, so it can be shared freely between threads.
     */
    class TruncatedSystem
    {
        public:
            TruncatedSystem(SystemPtr system, Truncation truncation);
            TruncatedSystem(SystemPtr system, Index depth, Index breadth);

            auto system() const -> const InverseSystem & { return *_system; }
            auto system_ptr() const -> const SystemPtr & { return _system; }
            auto truncation() const -> const Truncation & { return _truncation; }
            auto depth() const -> Index { return _truncation.depth; }
            auto breadth(Index i) const -> Index { return _truncation.at(i); }

            /// Truncated level i, ascending.
            auto vertices(Index i) const -> const std::vector<Vertex> &;
            auto contains(Index i, const Vertex & v) const -> bool;

            /// Number of level-i vertices present only because something above maps to them.
            auto padding(Index i) const -> std::size_t;

            /// Full symbolic ball at level i of a truncated vertex.
            auto ball(Index i, const Vertex & v) const -> const SymbolicVertexSet &;

            /// The relation at level i restricted to the truncated vertices.
            auto graph(Index i) const -> const CellularGraph &;

            auto related(Index i, const Vertex & x, const Vertex & y) const -> bool;

        private:
            struct Level
            {
                std::vector<Vertex> vertices;
                std::vector<SymbolicVertexSet> balls;
                std::size_t padding = 0;
                CellularGraph graph;
            };

            SystemPtr _system;
            Truncation _truncation;
            std::vector<Level> _levels;

            auto level_data(Index i) const -> const Level &;
            auto position(Index i, const Vertex & v) const -> std::optional<std::size_t>;
    };

    auto level(const TruncatedSystem & trunc, Index i) -> CellularGraph;

    struct CheckResult
    {
        std::string name;
        bool passed = true;
        std::string detail;
        std::vector<Vertex> counterexample;
    };

    struct AxiomOptions
    {
        bool surjectivity = false;
        std::optional<std::uint64_t> seed;
    };

    struct AxiomReport
    {
        std::string system;
        Truncation truncation;
        std::vector<CheckResult> checks;

        auto passed() const -> bool;
    };

    auto check_axioms(const TruncatedSystem & trunc, const AxiomOptions & options = {}) -> AxiomReport;

    /// 64-bit FNV-1a, used to derive reproducible seeds from names.
    auto fnv1a(const std::string & text) -> std::uint64_t;
}

#endif
