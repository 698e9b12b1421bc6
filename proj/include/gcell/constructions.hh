#ifndef GCELL_CONSTRUCTIONS_HH
#define GCELL_CONSTRUCTIONS_HH 1

#include <gcell/threads.hh>

#include <string>
#include <vector>

namespace gcell
{
    /// Grid points k/grid of [0, 1], x ~ 1 - x, 0 ~ 1/2 ~ 1, folded onto [0, 1/2].
    auto circle_system(Index grid = 16) -> SystemPtr;

    /// The same levels as circle_system with identity bonding.
    auto circle_identity_system(Index grid = 16) -> SystemPtr;

    enum class VanishingReading
    {
        /// Level n is {2^-t : t >= n}, so every point eventually drops out.
        Shrinking,
        /// Every level is the grid points of (0, 1/2].
        Verbatim
    };

    /// Full relation at every level, inclusion as bonding.
    auto vanishing_tail_system(VanishingReading reading = VanishingReading::Shrinking, Index grid = 16) -> SystemPtr;

    /// Every level is {n_1, n_2, ...} with the full relation and identity bonding.
    auto nat_full_system() -> SystemPtr;

    /// L(2) = 1, L(i) = L(i - 1) + i - 1. Throws RangeError below 2.
    auto L_index(Index i) -> Index;

    /**
     * The non-regular system. Level i has a_i, the b_i^k and d_i^k for
     * k >= 1 (no d at level 1), and the blocks {c1_i_k, c2_i_k} for
     * k <= L(i). a_i is adjacent to b_i^k exactly when k >= i, and b_i^k for
     * k < i is adjacent to d_i^{k + (i-1)j}.
     */
    auto nonregular_system() -> SystemPtr;

    /**
     * The upward chain d_i^k, w_{i+1}, ... in which each step is the unique
     * c/d preimage of the previous vertex, stopping at the first c vertex.
     * Throws CertificateFailure if no c vertex turns up within max_steps.
     */
    auto d_trajectory(Index i, Index k, Index max_steps = 1000) -> std::vector<Vertex>;

    struct WitnessReport
    {
        Index j = 0, i = 0, depth = 0;
        ThreadPrefix a, b, c, d;
        std::vector<CheckResult> facts;
        Index separation_level = 0;

        auto passed() const -> bool;
    };

    /// Builds the threads showing a point and a closed set that cannot be separated.
    auto nonregularity_witness(Index j, Index i, Index depth) -> WitnessReport;

    /**
     * j_1 < ... < j_count where, from j_0 = 1, each j_t is the least j with
     * g_{j_{t-1}}^j(B(base_j, 2r_j)) inside B(base_{j_{t-1}}, r_{j_{t-1}}).
     * Only levels up to min(budget, base depth) are searched.
     */
    auto collapse_indices(const InverseSystem & system, const ThreadPrefix & base, Index count, Index budget) -> std::vector<Index>;

    struct WedgeComponent
    {
        SystemPtr system;
        ThreadPrefix base;
    };

    /**
     * Glues the components at their base threads. Level i is the disjoint
     * union of each component's level j_i (vertices tagged with origin
     * k + 1), related within a component as before and additionally all
     * together across the balls of the base coordinates.
     */
    auto wedge_combine(const std::vector<WedgeComponent> & components, Index count, Index budget, const std::string & name = "wedge") -> SystemPtr;

    /// The lexicographically first live prefix of depth budget.
    auto default_base(const SystemPtr & system, Index budget, Index breadth) -> ThreadPrefix;
}

#endif
