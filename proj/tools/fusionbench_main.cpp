#include <iostream>

#include "fusionbench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fusionbench::run(args, std::cout, std::cerr);
}
