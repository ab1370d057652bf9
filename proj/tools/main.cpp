#include <iostream>

#include "convpoly/cli.hpp"

int main(int argc, char** argv) { return convpoly::run_cli(argc, argv, std::cout, std::cerr); }
