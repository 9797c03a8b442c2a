#include <iostream>

#include "viaccel/cli.hpp"

int main(int argc, char** argv) { return viaccel::run_cli(argc, argv, std::cout, std::cerr); }
