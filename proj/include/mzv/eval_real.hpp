#pragma once

#include <map>
#include <string>

#include "mzv/bigfixed.hpp"
#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"
#include "mzv/relations.hpp"

namespace mzv {

/// High-precision zeta evaluation. A single value is computed by splitting
/// its iterated-integral word at 1/2 and convolving multiple polylogarithms
/// at 1/2, which converge geometrically; everything runs in fixed point
/// with a guard-bit margin, so the published result is good to about
/// 2^{-frac_bits+8}.
class RealEvaluator {
public:
    explicit RealEvaluator(int frac_bits = 192);

    int frac_bits() const { return frac_bits_; }

    BigFixed mzv(const Index& k);       // requires k admissible
    BigFixed mzv_star(const Index& k);  // requires k_1 >= 2
    BigFixed eval_sum(const FormalSum& s);

private:
    BigFixed polylog_half(const std::vector<int>& comp) const;

    int frac_bits_;
    int work_bits_;
    int cutoff_;
    std::map<Index, BigFixed, CanonicalLess> cache_;
};

struct EvalReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs_value;
    std::string rhs_value;
    std::string abs_diff;
    std::string tolerance;
    bool pass = false;
};

/// Evaluate both sides and compare |lhs-rhs| against 10^{-tol_pow10}.
/// tol_pow10 <= 0 means the default of frac_bits/2 bits, reported in
/// decimal digits.
EvalReport verify_real(const Relation& rel, RealEvaluator& ev, int tol_pow10 = 0);

}  // namespace mzv
