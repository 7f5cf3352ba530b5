// Acceptance suite: runs every registered verification check at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exit code 0 iff all
// criteria pass. TORSIONLAB_SEED overrides the default seed.

#include <cstdio>
#include <cstdlib>

#include "torsionlab/suite.hpp"

int main() {
    std::vector<std::uint64_t> seeds;
    if (const char* env = std::getenv("TORSIONLAB_SEED")) seeds.push_back(std::strtoull(env, nullptr, 10));

    torsionlab::SuiteReport report;
    try {
        report = torsionlab::run_suite({}, seeds);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 1;
    }
    int index = 1;
    for (const auto& c : report.checks) {
        std::printf("CRITERION %2d %-4s %-36s max_resid=%.3e tol=%.1e t=%.2fs%s%s\n", index++,
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual, c.tolerance, c.runtime_sec,
                    c.note.empty() ? "" : " ", c.note.c_str());
    }
    std::printf("%s\n", report.all_pass() ? "ACCEPTANCE: ALL CRITERIA PASSED" : "ACCEPTANCE: FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
}
