#include <iostream>

#include "qwalk2/commands.hpp"

int main(int argc, char** argv) { return qwalk2::cli_main(argc, argv, std::cout, std::cerr); }
