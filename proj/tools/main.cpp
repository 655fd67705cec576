#include <iostream>

#include "matchstick/cli.hpp"

int main(int argc, char** argv) { return matchstick::cli::run(argc, argv, std::cout, std::cerr); }
