#include <iostream>

#include "gpscale/cli.hpp"

int main(int argc, char** argv) { return gpscale::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
