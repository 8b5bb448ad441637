#include <iostream>
#include <string>
#include <vector>

#include "pathsep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pathsep::run_cli(args, std::cout, std::cerr);
}
