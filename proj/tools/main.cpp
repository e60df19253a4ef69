#include <iostream>

#include "lapn/cli.hpp"

int main(int argc, char** argv) { return lapn::run_cli(argc, argv, std::cout, std::cerr); }
