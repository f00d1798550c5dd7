#pragma once

#include <string>
#include <vector>

namespace shx {

struct CliResult {
    int exit_code = 0;
    std::string out;  // everything the command prints to stdout
};

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 pass, 1 mathematical fail, 2 parse/config error, 3 scale mismatch.
/// Identical arguments produce byte-identical output.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace shx
