#include <iostream>

#include "uglov/cli.hpp"

int main(int argc, char** argv) { return uglov::run_cli(argc, argv, std::cout, std::cerr); }
