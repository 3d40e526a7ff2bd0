#include <iostream>

#include "ptlattice_cli/commands.hpp"

int main(int argc, char** argv) { return ptl::cli::run(argc, argv, std::cout, std::cerr); }
