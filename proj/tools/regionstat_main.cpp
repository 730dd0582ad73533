#include <string>
#include <vector>

#include "regionstat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return regionstat::cli_run(args);
}
