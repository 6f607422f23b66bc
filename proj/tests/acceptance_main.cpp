// Acceptance suite runner: one pass/fail line per criterion, exit 1 on any
// failure. Runs the full level unless --fast is given.
#include <cstring>
#include <iostream>

#include "atgrid/selftest.hpp"

int main(int argc, char** argv) {
    auto level = atgrid::selftest::Level::full;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) level = atgrid::selftest::Level::fast;
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--fast] [--threads N]\n";
            return 2;
        }
    }
    return atgrid::selftest::run_and_print(level, std::cout, threads) ? 0 : 1;
}
