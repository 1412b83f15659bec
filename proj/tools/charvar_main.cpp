#include <iostream>
#include <vector>

#include "charvar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return charvar::cli_run(args, std::cout, std::cerr);
}
