#include <iostream>

#include "cluster/cli.hpp"

int main(int argc, char** argv) { return cluster::run_cli(argc, argv, std::cout, std::cerr); }
