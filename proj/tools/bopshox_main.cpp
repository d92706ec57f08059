#include "bopshox/cli.hpp"

int main(int argc, char** argv) { return bopshox::cli::run(argc, argv); }
