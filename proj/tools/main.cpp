#include <iostream>

#include "maxcross_cli.hpp"

int main(int argc, char** argv) { return maxcross::cli::run(argc, argv, std::cout, std::cerr); }
