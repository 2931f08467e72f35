#include "nullspace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return nullspace::cli_main(args, std::cout, std::cerr);
}
