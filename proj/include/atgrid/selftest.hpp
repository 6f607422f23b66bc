#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atgrid::selftest {

enum class Level { fast, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the certification suite. `fast` trims the two expensive sweeps (the
// 2^24 torus expansion and the K_{2,4} 3-list sweep); `full` is the
// authoritative run.
std::vector<CriterionResult> run(Level level, int threads = 0);

// One line per criterion; returns true when everything passed.
bool run_and_print(Level level, std::ostream& os, int threads = 0);

}  // namespace atgrid::selftest
