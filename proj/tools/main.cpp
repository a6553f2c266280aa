#include <iostream>

#include "moebius/cli.hpp"

int main(int argc, char** argv) { return moebius::cli::run(argc, argv, std::cout, std::cerr); }
