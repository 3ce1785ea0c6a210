#include "semicover/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return semicover::cli_main(argc, argv, std::cout, std::cerr); }
