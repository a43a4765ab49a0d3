// Acceptance suite: runs every numbered check and prints one line per
// criterion.  Exit status 0 iff everything passes.

#include <cstdio>

#include "sylow/verify.hpp"

int main() {
    sylow::Harness harness;
    bool all_pass = true;
    double total = 0;
    for (int idx = 1; idx <= 10; ++idx) {
        sylow::CheckResult r = sylow::run_criterion(idx, harness);
        all_pass = all_pass && r.pass;
        total += r.seconds;
        std::printf("[%s] criterion %2d: %s (%s) [%.2fs]\n",
                    r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    std::printf("%s: acceptance suite finished in %.1fs\n",
                all_pass ? "PASS" : "FAIL", total);
    return all_pass ? 0 : 1;
}
