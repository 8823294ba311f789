#include <iostream>
#include <vector>

#include "symsig/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symsig::cli::run(args, std::cout, std::cerr);
}
