// Acceptance battery: every criterion at full scale, one pass/fail line each.
// Exit code 0 iff all pass.
#include <cstdlib>
#include <iostream>

#include "qmat/suite.hpp"

int main() {
    qmat::SuiteOptions opt; // full scale: n <= 3, centralizer n=2 d<=8 and n=3 d<=5
    const char* tenv = std::getenv("QM_THREADS");
    if (tenv && std::atoi(tenv) >= 1) opt.threads = std::atoi(tenv);

    std::vector<qmat::CheckResult> results = qmat::run_acceptance_checks(opt, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return all ? 0 : 1;
}
