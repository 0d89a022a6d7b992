#include <iostream>

#include "jw/cli/cli.hpp"

int main(int argc, char** argv) { return jw::cli::run_cli(argc, argv, std::cout, std::cerr); }
