#include <iostream>

#include "ratfield/cli/run.hpp"

int main(int argc, char** argv) { return ratfield::run(argc, argv, std::cout, std::cerr); }
