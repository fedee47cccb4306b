#include <iostream>

#include "fanodelta/cli.hpp"

int main(int argc, char** argv) { return fano::run(argc, argv, std::cout, std::cerr); }
