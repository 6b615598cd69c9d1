#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> arguments(argv + 1, argv + argc);
    return tcsp::cli::run_cli(arguments, std::cout, std::cerr);
}
