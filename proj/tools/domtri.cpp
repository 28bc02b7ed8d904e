#include <iostream>

#include "domtri/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return domtri::run(args, std::cout, std::cerr);
}
