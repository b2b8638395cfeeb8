#include <iostream>

#include "seqsearch/cli.hpp"

int main(int argc, char** argv) { return seqsearch::cli_main(argc, argv, std::cout, std::cerr); }
