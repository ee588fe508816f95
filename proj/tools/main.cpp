#include <iostream>

#include "wordmap/cli.hpp"

int main(int argc, char** argv) { return wordmap::cli_main(argc, argv, std::cout, std::cerr); }
