#include <iostream>

#include "atfdwt/cli.hpp"

int main(int argc, char** argv) { return atfdwt::run_cli(argc, argv, std::cout, std::cerr); }
