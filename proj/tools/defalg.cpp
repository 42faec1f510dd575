#include "defalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return defalg::cli::run(argc, argv, std::cout, std::cerr); }
