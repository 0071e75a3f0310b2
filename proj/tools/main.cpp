// SPDX-License-Identifier: Apache-2.0
#include <permpoly/cli.hpp>

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return permpoly::cli::run(args, std::cout, std::cerr);
}
