#include <iostream>

#include "dcut/cli.hpp"

int main(int argc, char** argv) { return dcut::run_cli(argc, argv, std::cout, std::cerr); }
