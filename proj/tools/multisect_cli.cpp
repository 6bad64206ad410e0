#include <vector>

#include "multisect/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return multisect::cli::run(args);
}
