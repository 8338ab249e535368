#include "weakrep/cli.hpp"

int main(int argc, char** argv) {
    return weakrep::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
