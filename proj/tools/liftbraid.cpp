#include <iostream>

#include "liftbraid/cli.hpp"

int main(int argc, char** argv) { return liftbraid::cli::run(argc, argv, std::cout, std::cerr); }
