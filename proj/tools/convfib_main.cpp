#include <iostream>
#include <string>
#include <vector>

#include "convfib/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return convfib::cli::run(args, std::cout, std::cerr);
}
