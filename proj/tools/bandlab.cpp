#include <string>
#include <vector>

#include "bandlim/runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bandlim::run_cli(args);
}
