#ifndef GCELL_DOT_HH
#define GCELL_DOT_HH 1

#include <gcell/system.hh>

#include <string>

namespace gcell
{
    /// The truncated level as an undirected DOT graph, one node per vertex and one edge per non-loop pair.
    auto emit_dot(const TruncatedSystem & trunc, Index level) -> std::string;
}

#endif
