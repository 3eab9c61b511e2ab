#include <string>
#include <vector>

#include "schurwin/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schurwin::cli::run(std::move(args));
}
