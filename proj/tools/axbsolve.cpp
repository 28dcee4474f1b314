#include <iostream>
#include <string>
#include <vector>

#include "axbsolve/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return axbsolve::cli::run(args, std::cout, std::cerr);
}
