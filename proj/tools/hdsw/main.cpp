#include <iostream>
#include <string>
#include <vector>

#include "hds/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hds::cli_main(args, std::cout, std::cerr);
}
