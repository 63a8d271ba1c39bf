#include <iostream>

#include "jwalk/cli.hpp"

int main(int argc, char** argv) { return jwalk::cli::run(argc, argv, std::cout, std::cerr); }
