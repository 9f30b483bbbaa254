#include <iostream>

#include "cliffgrass/cli.hpp"

int main(int argc, char** argv) {
    return cliffgrass::cli::run(argc, argv, std::cout, std::cerr);
}
