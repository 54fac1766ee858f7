#include <iostream>
#include <vector>

#include "zetadiv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zetadiv::cli::run(args, std::cout, std::cerr);
}
