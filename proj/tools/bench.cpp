#include <string>
#include <vector>

#include "nioa/cli.hpp"

int main(int argc, char** argv) {
    return nioa::bench_main(std::vector<std::string>(argv + 1, argv + argc));
}
