#include <iostream>

#include "polyerg/cli.hpp"

int main(int argc, char** argv) { return polyerg::run_cli(argc, argv, std::cout, std::cerr); }
