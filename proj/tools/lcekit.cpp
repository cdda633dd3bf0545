#include "lcekit/cli.hpp"

int main(int argc, char** argv) { return lcekit::cli::run_command(argc, argv); }
