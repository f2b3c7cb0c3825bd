#include <iostream>
#include <string>
#include <vector>

#include "wallscope/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wallscope::cli::run(args, std::cout, std::cerr);
}
