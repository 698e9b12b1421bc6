#include <gcell/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return gcell::run_command(args, std::cout, std::cerr);
}
