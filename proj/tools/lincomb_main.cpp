#include <iostream>

#include "lincomb/cli.hpp"

int main(int argc, char** argv) { return lincomb::cli_main(argc, argv, std::cout, std::cerr); }
