#include <iostream>

#include "tribell/cli.hpp"

int main(int argc, char** argv) {
    return tribell::cli::run(argc, argv, std::cout, std::cerr);
}
