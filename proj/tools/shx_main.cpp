#include <cstdio>
#include <string>
#include <vector>

#include "shx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const shx::CliResult r = shx::run_cli(args);
    std::fputs(r.out.c_str(), stdout);
    return r.exit_code;
}
