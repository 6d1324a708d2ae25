#pragma once

#include <string>
#include <vector>

#include "mzv/eval_finite.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/index.hpp"

namespace mzv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // counts swept, worst diff, first failure, ...
};

struct SuiteConfig {
    int frac_bits = 192;
    uint64_t prime_max = 1000;
};

/// Independent oracles, kept free of the code paths they check.
namespace oracle {

/// zeta_p by direct nested descending loops.
uint64_t brute_zeta_p(const Index& k, uint64_t p);

/// zeta_p_star by direct weakly-decreasing loops.
uint64_t brute_zeta_p_star(const Index& k, uint64_t p);

/// Truncated nested series sum_{N >= n_1 > ... > n_r} in long double.
long double naive_mzv(const Index& k, long n_max);

}  // namespace oracle

/// The numbered acceptance criteria. Each runs its full sweep and reports
/// one pass/fail with a short detail string.
CriterionResult run_criterion(int id, const SuiteConfig& cfg);

/// "lemma" -> {5}, "equivalence" -> {6}, "integral-series" -> {7},
/// "all" -> 1..10.
std::vector<CriterionResult> run_suite(const std::string& which, const SuiteConfig& cfg);

}  // namespace mzv
