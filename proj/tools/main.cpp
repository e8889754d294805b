#include <iostream>

#include "zdglab/cli.hpp"

int main(int argc, char** argv) { return zdg::cli::run(argc, argv, std::cout, std::cerr); }
