#include <iostream>

#include "bihom/cli.hpp"

int main(int argc, char** argv) { return bihom::run_cli(argc, argv, std::cout, std::cerr); }
