#include <iostream>

#include "eom_cli.hpp"

int main(int argc, char** argv) { return eom::cli::run(argc, argv, std::cout, std::cerr); }
