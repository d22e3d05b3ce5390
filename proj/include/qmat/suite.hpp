#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmat/zpoly.hpp"

namespace qmat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    int max_n = 3;                                        // checks sweep n = 1..max_n
    std::vector<std::pair<int, int>> main_runs = {{2, 8}, {3, 5}}; // (n, max degree)
    int assoc_triples = 1000;
    int map_samples = 200;
    int lemma3_samples = 100;
    Rational specialization_point = Rational(2);
    int threads = 1;
};

/// Runs the full verification battery (exact, zero tolerance) and returns one
/// result per check. If progress is non-null, a pass/fail line is printed as
/// each check finishes.
std::vector<CheckResult> run_acceptance_checks(const SuiteOptions& opt,
                                               std::ostream* progress = nullptr);

struct SuiteConfig {
    int n = 2;
    int max_deg = 4;
    Rational q0 = Rational(2); // specialization point for the consistency check
    int threads = 1;
    bool json = false;
};

/// The CLI `suite` subcommand: the same battery scaled to the requested n and
/// degree bound. Prints a table (or JSON) and returns 0 iff every check passed.
int run_suite(const SuiteConfig& cfg, std::ostream& out);

} // namespace qmat
