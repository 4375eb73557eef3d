#include <iostream>
#include <string>
#include <vector>

#include "basephi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return basephi::cli::run(args, std::cout, std::cerr);
}
