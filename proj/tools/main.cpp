#include "blochgeo/cli.hpp"

int main(int argc, char** argv) {
    return blochgeo::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
