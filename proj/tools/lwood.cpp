#include "lwood/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lwood::run(argc, argv, std::cout, std::cerr); }
