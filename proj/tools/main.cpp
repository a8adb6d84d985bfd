#include <iostream>
#include <string>
#include <vector>

#include "fuzzygraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fuzzygraph::cli::run(args, std::cout, std::cerr);
}
