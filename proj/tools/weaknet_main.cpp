#include <iostream>

#include "weaknet/cli.hpp"

int main(int argc, char** argv) { return weaknet::cli::run(argc, argv, std::cout, std::cerr); }
