#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"
#include "mzv/relations.hpp"

namespace mzv {

bool is_prime(uint64_t n);
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

/// One residue per prime; an element of the desk-scale model of the ring
/// where sequences agreeing at all but finitely many primes are identified.
struct ResidueVector {
    std::map<uint64_t, uint64_t> residues;
};

/// Exact truncated harmonic sums mod p. Per-prime inverse-power tables and
/// a value memo are kept across calls, so sweeping a family of relations
/// over a prime range touches each (index, p) pair once.
class FiniteEvaluator {
public:
    /// sum_{p > n_1 > ... > n_r >= 1} prod n_i^{-k_i} mod p.
    uint64_t zeta_p(const Index& k, uint64_t p);

    /// Weakly-decreasing variant, via the star expansion.
    uint64_t zeta_p_star(const Index& k, uint64_t p);

    uint64_t eval_sum_mod(const FormalSum& s, uint64_t p);

private:
    const std::vector<uint64_t>& inv_pows(uint64_t p, int k);

    struct KeyLess {
        bool operator()(const std::pair<uint64_t, Index>& a,
                        const std::pair<uint64_t, Index>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return CanonicalLess{}(a.second, b.second);
        }
    };

    // (p, exponent) -> table of n^{-k} mod p for n = 0..p-1
    std::map<std::pair<uint64_t, int>, std::vector<uint64_t>> tables_;
    std::map<std::pair<uint64_t, Index>, uint64_t, KeyLess> memo_;
};

struct FiniteReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    ResidueVector lhs;
    ResidueVector rhs;
    /// Primes where the residues differ, split at the relation weight:
    /// only failures above the weight count against the verdict.
    std::vector<uint64_t> failing_primes;
    std::vector<uint64_t> small_prime_exceptions;
    bool pass = false;
};

FiniteReport verify_finite(const Relation& rel, uint64_t lo, uint64_t hi, FiniteEvaluator& ev);

}  // namespace mzv
