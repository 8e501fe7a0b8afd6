#include <iostream>

#include "polyo/cli.hpp"

int main(int argc, char** argv) { return polyo::cli::run(argc, argv, std::cout, std::cerr); }
