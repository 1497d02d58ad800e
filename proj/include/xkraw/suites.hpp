#pragma once

#include <string>
#include <vector>

#include "xkraw/structure.hpp"

namespace xkraw {

// Parameter sweep for the named verification suites.  The defaults cover
// the desk-scale grid p in {1/3, 1/2, 3/5}, N in {2..5}, d <= 3.
struct SweepConfig {
    std::vector<Rational> ps{Rational(1, 3), Rational(1, 2), Rational(3, 5)};
    std::vector<long> Ns{2, 3, 4, 5};
    long d_max = 3;
    long n_max = 8;  // cap on member indices in per-family checks
    int j = 0;       // 0 = all four types
    long d = -1;     // -1 = every depth up to d_max
    bool inject_eta_fault = false;  // test hook: flips one eta sign in the back-mapping check
};

// The five verification suites, in their run order.
std::vector<std::string> suite_names();

// Runs one named suite ("symmetries", "factorization", "eigen",
// "orthogonality", "diophantine"); throws InvalidParam for unknown names.
Report run_suite(const std::string& name, const SweepConfig& cfg, int jobs = 1);

// All suites in order, merged into one report.
Report run_all_suites(const SweepConfig& cfg, int jobs = 1);

} // namespace xkraw
