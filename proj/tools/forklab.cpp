#include <iostream>

#include "forklab/cli.hpp"

int main(int argc, char** argv) { return forklab::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
