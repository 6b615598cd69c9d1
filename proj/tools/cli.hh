#ifndef TCSP_TOOLS_CLI_HH
#define TCSP_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace tcsp::cli
{
    enum ExitCode : int
    {
        accept = 0,
        reject = 1,
        usage_error = 2,
        cap_exceeded = 3
    };

    /// Runs one subcommand. `arguments` excludes the program name. JSON results go to `out`
    /// (or the --out file), human-readable notes and errors to `err`.
    auto run_cli(const std::vector<std::string> & arguments, std::ostream & out, std::ostream & err) -> int;
}

#endif
