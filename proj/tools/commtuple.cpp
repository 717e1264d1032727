#include <iostream>

#include "commtuple/cli.hpp"

int main(int argc, char** argv) { return commtuple::cli::run(argc, argv, std::cout, std::cerr); }
