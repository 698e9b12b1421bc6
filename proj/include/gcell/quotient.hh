#ifndef GCELL_QUOTIENT_HH
#define GCELL_QUOTIENT_HH 1

#include <gcell/threads.hh>

#include <optional>
#include <string>
#include <vector>

namespace gcell
{
    class DisjointSet
    {
        public:
            explicit DisjointSet(std::size_t n);

            auto find(std::size_t x) -> std::size_t;
            auto unite(std::size_t x, std::size_t y) -> bool;

        private:
            std::vector<std::size_t> _parent, _rank;
    };

    /// Closure classes of the relation on enumerated prefixes.
    struct Partition
    {
        Index depth = 0;
        /// Each block ascending, blocks ordered by their least member.
        std::vector<std::vector<ThreadPrefix>> blocks;

        auto block_of(const ThreadPrefix & p) const -> std::optional<std::size_t>;
        auto prefix_count() const -> std::size_t;
    };

    auto quotient_at_depth(const TruncatedSystem & trunc, Index depth, const EnumerationOptions & options = {}) -> Partition;

    /**
     * The system of level quotients G_i / r_i over the truncation: each class
     * is named by its least vertex, the relation is the diagonal, and bonding
     * is induced. Throws PreconditionError if some truncated level is not
     * transitive or the induced map is not well defined.
     */
    auto level_quotient_system(const TruncatedSystem & trunc) -> SystemPtr;

    struct QuotientComparison
    {
        Index depth = 0;
        std::size_t gstar_classes = 0;
        std::size_t levelq_threads = 0;
        std::string witness;

        auto equal() const -> bool { return gstar_classes == levelq_threads; }
    };

    auto compare_quotients(const TruncatedSystem & trunc, Index depth) -> QuotientComparison;
}

#endif
