#include <iostream>

#include "avgdist_cli.hpp"

int main(int argc, char** argv) { return avgdist::cli::run(argc, argv, std::cout, std::cerr); }
