#include <golay/cli.hpp>

int main(int argc, char** argv) {
    return golay::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
