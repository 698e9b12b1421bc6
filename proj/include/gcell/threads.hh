#ifndef GCELL_THREADS_HH
#define GCELL_THREADS_HH 1

#include <gcell/errors.hh>
#include <gcell/system.hh>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gcell
{
    /// The first depth() coordinates of a thread; coords[0] lives at level 1.
    struct ThreadPrefix
    {
        std::vector<Vertex> coords;

        auto depth() const -> Index { return static_cast<Index>(coords.size()); }

        /// Coordinate at level i, 1-based.
        auto at(Index i) const -> const Vertex &;

        /// The first n coordinates.
        auto restricted(Index n) const -> ThreadPrefix;

        auto to_string() const -> std::string;

        auto operator== (const ThreadPrefix &) const -> bool = default;
    };

    auto operator<=> (const ThreadPrefix & x, const ThreadPrefix & y) -> std::strong_ordering;
    auto operator<< (std::ostream & s, const ThreadPrefix & p) -> std::ostream &;

    /// The prefix ending in top at level n, filled in downwards by bonding.
    auto prefix_through(const InverseSystem & system, Index n, const Vertex & top) -> ThreadPrefix;

    /// The prefix whose level-i coordinate is make(i), checked for consistency.
    template <typename Make_>
    auto prefix_from(const InverseSystem & system, Index depth, Make_ make) -> ThreadPrefix;

    auto is_consistent(const InverseSystem & system, const ThreadPrefix & p) -> bool;

    /// Every one-level extension of p by a preimage with parameters <= bound.
    auto extend(const InverseSystem & system, const ThreadPrefix & p, Index bound) -> std::vector<ThreadPrefix>;

    struct EnumerationOptions
    {
        std::size_t budget = 1'000'000;
        /// When set, receives the prefixes that die: their restriction is live but they are not.
        std::vector<ThreadPrefix> * dead = nullptr;
    };

    /**
     * Live depth-n prefixes inside the truncation, ascending. A top-level
     * vertex is live when it has a preimage one level further up; a lower
     * one is live when some live vertex above maps to it. So a prefix is
     * listed exactly when it extends through the whole truncation and one
     * step beyond it.
     */
    auto enumerate_threads(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options = {}) -> std::vector<ThreadPrefix>;

    /// (x_i, y_i) in r_i for every i. Throws UsageError on a depth mismatch.
    auto related_at_depth(const TruncatedSystem & trunc, const ThreadPrefix & x, const ThreadPrefix & y) -> bool;
    auto related_at_depth(const InverseSystem & system, const ThreadPrefix & x, const ThreadPrefix & y) -> bool;

    /// Pairwise relatedness of a list of prefixes of equal depth.
    class RelatednessMatrix
    {
        public:
            RelatednessMatrix(const TruncatedSystem & trunc, const std::vector<ThreadPrefix> & prefixes);

            auto size() const -> std::size_t { return _n; }
            auto operator() (std::size_t x, std::size_t y) const -> bool { return _bits[x * _n + y]; }

        private:
            std::size_t _n;
            std::vector<bool> _bits;
    };

    using PrefixTriple = std::array<ThreadPrefix, 3>;

    /// First (x, y, z) in lexicographic order with x ~ y, y ~ z and not x ~ z.
    auto transitivity_counterexample(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options = {}) -> std::optional<PrefixTriple>;

    /// Least j in [i, min(depth, budget_j)] with g_i^j(B(p_j, 2r_j)) inside B(p_i, r_i).
    auto gcell_certificate(const InverseSystem & system, const ThreadPrefix & p, Index i, Index budget_j) -> std::optional<Index>;

    /// The cylinder of threads whose level-i coordinate lies in set.
    struct BasicOpen
    {
        Index level = 1;
        SymbolicVertexSet set;

        auto to_string() const -> std::string;
    };

    auto in_basic_open(const ThreadPrefix & p, const BasicOpen & u) -> bool;

    /// Members of all related to some member of s.
    auto saturate(const TruncatedSystem & trunc, const std::vector<ThreadPrefix> & s, const std::vector<ThreadPrefix> & all) -> std::vector<ThreadPrefix>;

    /**
     * Searches the cylinders over x_1, ..., x_n for one whose saturation stays
     * inside the union of a. Throws UsageError if the saturation of x itself
     * already leaves it.
     */
    auto closedness_probe(const TruncatedSystem & trunc, const ThreadPrefix & x, const std::vector<BasicOpen> & a) -> std::optional<BasicOpen>;

    struct SeparationSetDescriptor
    {
        Index level = 1;
        SymbolicVertexSet center;
        SymbolicVertexSet boundary;
        /// Least deeper level where the centre prefix is cut off from the whole boundary, if within depth.
        std::optional<Index> witness_depth;
        std::vector<ThreadPrefix> members;
    };

    struct SeparationResult
    {
        SeparationSetDescriptor around_x, around_y;
        bool disjoint = true;
    };

    /// Open sets around unrelated x and y. Throws UsageError if they are related.
    auto separation_sets(const TruncatedSystem & trunc, const ThreadPrefix & x, const ThreadPrefix & y) -> SeparationResult;

    template <typename Make_>
    auto prefix_from(const InverseSystem & system, Index depth, Make_ make) -> ThreadPrefix
    {
        ThreadPrefix p;
        for (Index i = 1 ; i <= depth ; ++i)
            p.coords.push_back(make(i));
        if (! is_consistent(system, p))
            throw CertificateFailure("prefix " + p.to_string() + " is not consistent");
        return p;
    }
}

#endif
