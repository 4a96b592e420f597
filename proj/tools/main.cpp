#include "graphrecover/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return graphrecover::run_cli(argc, argv, std::cout, std::cerr); }
