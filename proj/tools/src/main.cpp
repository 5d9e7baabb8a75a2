#include <iostream>
#include <string>
#include <vector>

#include "collatzdb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return collatzdb::cli::run(args, std::cout, std::cerr);
}
