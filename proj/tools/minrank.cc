/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minrank/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return minrank::run_cli(args, std::cin, std::cout, std::cerr);
}
