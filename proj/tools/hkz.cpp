#include <iostream>

#include "hkz/cli.hpp"

int main(int argc, char** argv) { return hkz::run_cli(argc, argv, std::cout, std::cerr); }
