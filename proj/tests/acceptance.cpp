// Acceptance gate: runs every verification suite and prints one line per
// criterion.  Exit code 0 only if all pass.

#include <iostream>

#include "hexflip/verify.hpp"

int main() {
    using namespace hexflip;
    const std::vector<std::pair<int, std::string>> criteria = {
        {1, "conjugate-pair"},   {2, "hyperbolic-census"}, {3, "flat-bundles"},
        {4, "euclid-reciprocity"}, {5, "tree-oracle"},       {6, "leading-vertex"},
        {7, "group-laws"},         {8, "power-laws"},        {9, "farey"},
        {10, "lens"},              {11, "census-invariants"}, {12, "homology"},
    };

    SuiteOptions opt;
    bool all_pass = true;
    for (const auto& [number, suite] : criteria) {
        bool suite_pass = true;
        std::string first_fail;
        std::vector<CheckResult> results;
        try {
            results = run_suite(suite, opt);
        } catch (const std::exception& e) {
            suite_pass = false;
            first_fail = e.what();
        }
        for (const auto& r : results)
            if (!r.pass) {
                suite_pass = false;
                if (first_fail.empty()) first_fail = r.label + " -- " + r.detail;
            }
        std::cout << (suite_pass ? "[PASS] " : "[FAIL] ") << "criterion " << number
                  << " (" << suite << ", " << results.size() << " checks)";
        if (!suite_pass) std::cout << ": " << first_fail;
        std::cout << "\n" << std::flush;
        all_pass = all_pass && suite_pass;
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES")
              << std::endl;
    return all_pass ? 0 : 1;
}
