#include <iostream>

#include "isoshift/cli.hpp"

int main(int argc, char** argv) { return isoshift::cli::run(argc, argv, std::cout, std::cerr); }
