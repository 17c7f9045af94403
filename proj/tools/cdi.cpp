#include <iostream>

#include "cdi/cli.hpp"

int main(int argc, char** argv) { return cdi::cli::main(argc, argv, std::cout, std::cerr); }
