#include <iostream>

#include "risopt/cli.hpp"

int main(int argc, char** argv) { return risopt::cli::run(argc, argv, std::cout, std::cerr); }
