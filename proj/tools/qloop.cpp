#include "qloop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qloop::run_cli(argc, argv, std::cout, std::cerr); }
