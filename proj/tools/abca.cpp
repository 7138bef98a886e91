#include <iostream>

#include "abca/cli.hpp"

int main(int argc, char** argv) { return abca::cli::run(argc, argv, std::cout, std::cerr); }
