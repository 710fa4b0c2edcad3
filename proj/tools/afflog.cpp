#include <iostream>

#include "afflog/cli/commands.hpp"

int main(int argc, char** argv) { return afflog::run_cli(argc, argv, std::cout, std::cerr); }
