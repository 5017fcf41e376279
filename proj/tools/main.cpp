#include <iostream>

#include "gsym_cli.hpp"

int main(int argc, char** argv) { return gsym::cli::dispatch(argc, argv, std::cout, std::cerr); }
