#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hexflip/lattice.hpp"

namespace hexflip {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteOptions {
    Int pmax = 500;
    std::uint64_t seed = 12345;
    int radius = 8;
};

// Named verification suites; "all" runs every suite in order.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);

// Seeded words in the generators S, T and their inverses.
Mat random_word(std::mt19937_64& rng, int max_len);

} // namespace hexflip
