#include <iostream>
#include <string>
#include <vector>

#include "invlab_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return invlab::cli::run(args, std::cout, std::cerr);
}
