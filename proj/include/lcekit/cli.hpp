#pragma once

namespace lcekit::cli {

// Entry point of the command line tool; returns the process exit code.
// Subcommands: query, runs, verify, bench.
int run_command(int argc, const char* const* argv);

}  // namespace lcekit::cli
