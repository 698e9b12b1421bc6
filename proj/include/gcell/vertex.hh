#ifndef GCELL_VERTEX_HH
#define GCELL_VERTEX_HH 1

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gcell
{
    using Index = std::int64_t;
    using std::to_string;

    /// Symbol kinds. A-D are the families of the non-regular system, Nat and
    /// Dyadic index infinite stationary or shrinking levels, Rational houses
    /// the interval examples and User holds identifiers from DSL files.
    enum class Tag : std::uint8_t
    {
        A,
        B,
        C,
        D,
        Nat,
        Dyadic,
        Rational,
        User
    };

    auto tag_arity(Tag tag) -> std::size_t;

    /// True for tags whose last parameter is an integer index that symbolic
    /// sets may range over.
    auto tag_is_indexed(Tag tag) -> bool;

    /**
     * The universal vertex currency.
     *
     * Parameter layouts: a_i = (i), b_i^k = (i, k), c^r_{i,k} = (i, r, k),
     * d_i^k = (i, k), n_k = (k), 2^-t = (t), p/q = (p, q) in lowest terms
     * with q > 0. The origin path is empty except for vertices of combined
     * (wedge) systems, where it records which component they came from.
     */
    struct Vertex
    {
        std::vector<int> origin;
        Tag tag = Tag::User;
        std::vector<Index> params;
        std::string name;

        static auto a(Index i) -> Vertex;
        static auto b(Index i, Index k) -> Vertex;
        static auto c(Index r, Index i, Index k) -> Vertex;
        static auto d(Index i, Index k) -> Vertex;
        static auto nat(Index k) -> Vertex;
        static auto dyadic(Index t) -> Vertex;
        static auto rational(Index numerator, Index denominator = 1) -> Vertex;
        static auto user(std::string name) -> Vertex;

        /// Checked construction from raw parts; throws ParameterError on bad arity.
        static auto make(Tag tag, std::vector<Index> params, std::vector<int> origin = {}) -> Vertex;

        auto with_origin(int component) const -> Vertex;
        auto with_origin_path(const std::vector<int> & path) const -> Vertex;
        auto without_origin() const -> Vertex;

        /// Canonical display name: a_3, b_3^2, c1_4_6, d_2^5, n_7, 2^-3, 1/2, or the identifier.
        auto to_string() const -> std::string;

        auto operator== (const Vertex &) const -> bool = default;
    };

    /// Total order: origin, tag, then parameters (rationals numerically), then name.
    auto operator<=> (const Vertex & x, const Vertex & y) -> std::strong_ordering;

    auto operator<< (std::ostream & s, const Vertex & v) -> std::ostream &;

    /// Display name for a vertex whose last parameter is replaced by free text.
    auto indexed_name(const std::vector<int> & origin, Tag tag, const std::vector<Index> & fixed, const std::string & last) -> std::string;
}

#endif
