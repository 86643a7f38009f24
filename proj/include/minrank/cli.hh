/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_CLI_HH
#define MINRANK_GUARD_MINRANK_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace minrank
{
    namespace exit_code
    {
        inline constexpr int success = 0;
        inline constexpr int domain_error = 1;
        inline constexpr int usage_error = 2;
    }

    /**
     * The command line tool, minus process plumbing. args excludes the
     * program name. Results go to out (or --output), diagnostics to err.
     */
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

    /// Replays the published examples; one PASS/FAIL line each.
    auto run_selftest(std::ostream & out) -> bool;
}

#endif
