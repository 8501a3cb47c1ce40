#include <iostream>

#include "posalg/cli.hpp"

int main(int argc, char** argv) { return posalg::cli_dispatch(argc, argv, std::cout, std::cerr); }
