#ifndef GCELL_DSL_HH
#define GCELL_DSL_HH 1

#include <gcell/system.hh>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gcell
{
    /**
     * A finite system written out by hand:
     *
     *     system toy
     *     level 1
     *     vertex p q
     *     edge p q
     *     level 2
     *     vertex p0 p1 q0
     *     map 2 1
     *     p0 -> p
     *     ...
     *
     * Edges are kept as sorted pairs without loops, so the stored form is
     * already the reflexive symmetric closure.
     */
    struct SystemDescription
    {
        struct Level
        {
            std::vector<std::string> vertices;
            std::vector<std::pair<std::string, std::string>> edges;

            auto operator== (const Level &) const -> bool = default;
        };

        std::string name;
        std::vector<Level> levels;
        /// maps[i - 1] sends level i + 1 to level i.
        std::vector<std::map<std::string, std::string>> maps;

        auto operator== (const SystemDescription &) const -> bool = default;
    };

    /// Throws ParseError with the line and column of the offending token.
    auto parse_dsl(const std::string & text) -> SystemDescription;

    auto render_dsl(const SystemDescription & d) -> std::string;

    auto load_dsl_file(const std::string & path) -> SystemDescription;

    /// Levels past the last declared one repeat it with identity bonding.
    auto finite_system(const SystemDescription & d) -> SystemPtr;
}

#endif
