#include <iostream>

#include "rcurv/cli.hpp"

int main(int argc, char** argv) { return rcurv::run_cli(argc, argv, std::cout, std::cerr); }
