/*
 * acceptance.cpp
 * Acceptance runner: executes every verification suite at its full
 * parameters and prints one pass/fail line per criterion. Exit status is
 * the number of failed criteria.
 */
#include <cstdio>

#include "springer/verification.hpp"

int main() {
    using namespace springer;
    SuiteOptions opt;  // full radii, seed 7, 100/500/200 trials
    std::vector<SuiteResult> results = run_all_suites(opt);
    int failures = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        std::printf("criterion %02zu [%s]: %s (%zu checks, %lld ms)%s%s\n", i + 1,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.checks, r.ms,
                    r.detail.empty() ? "" : " - ", r.detail.c_str());
        if (!r.pass) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", results.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, results.size());
    return failures;
}
