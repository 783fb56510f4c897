#include <iostream>

#include "lllcount/cli.hpp"

int main(int argc, char** argv) { return lllcount::cli::main_entry(argc, argv, std::cout, std::cerr); }
