#include <iostream>
#include <vector>

#include "ncsf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncsf::run_command(std::move(args), std::cout, std::cerr);
}
