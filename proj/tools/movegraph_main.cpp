#include <iostream>

#include "movegraph/cli.hpp"

int main(int argc, char** argv) {
    return mg::cli::run(argc, argv, std::cout, std::cerr);
}
