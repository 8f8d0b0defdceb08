#include <iostream>
#include <string>
#include <vector>

#include "chimap/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return chimap::cli::run(args, std::cout, std::cerr);
}
