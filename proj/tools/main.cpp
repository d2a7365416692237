#include <iostream>
#include <string>
#include <vector>

#include "sbe/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sbe::run_cli(args, std::cout, std::cerr);
}
