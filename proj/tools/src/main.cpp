#include <iostream>

#include "krullkit_cli/cli.hpp"

int main(int argc, char** argv) { return krullkit::cli::run(argc, argv, std::cout, std::cerr); }
