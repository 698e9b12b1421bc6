#ifndef GCELL_CLI_HH
#define GCELL_CLI_HH 1

#include <gcell/system.hh>

#include <ostream>
#include <string>
#include <vector>

namespace gcell
{
    /**
     * Resolves a builtin name (circle, circle-identity, vanishing-tail,
     * vanishing-tail-verbatim, nat-full, nonregular, wedge:<a>,<b>) or a
     * path to a system file. Wedge bases are the first live prefixes of
     * depth + 4, and the wedge has depth levels.
     */
    auto resolve_system(const std::string & choice, Index grid, Index depth, Index breadth) -> SystemPtr;

    /// Runs one command line (without the program name). Returns 0 on PASS, 1 on FAIL, 2 on usage errors.
    auto run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
