#include <iostream>

#include "srg/cli.hpp"

int main(int argc, char** argv) { return srg::cli::main_entry(argc, argv, std::cout, std::cerr); }
