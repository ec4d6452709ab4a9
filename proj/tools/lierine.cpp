/*
 * lierine.cpp
 * -----------
 * Entry point: forward the command line to run_command and print the JSON
 * report on stdout.
 */
#include "lierine/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    lierine::cli::CommandResult res = lierine::cli::run_command(args);
    std::cout << res.report.dump(2) << "\n";
    return res.exit_code;
}
