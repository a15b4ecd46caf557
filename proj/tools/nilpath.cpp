#include <iostream>

#include "nilpath/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nilpath::cli::run(args, std::cout, std::cerr);
}
