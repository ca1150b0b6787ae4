#include "reflex/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return reflex::cli::run(argc, argv, std::cout, std::cerr); }
