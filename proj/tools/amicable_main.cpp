#include <iostream>
#include <string>
#include <vector>

#include "amicable/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return amicable::cli::run(args, std::cout, std::cerr);
}
