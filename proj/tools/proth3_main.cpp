#include <iostream>

#include "proth3/cli.hpp"

int main(int argc, char** argv) {
    return proth3::cli::run(argc, argv, std::cout, std::cerr);
}
