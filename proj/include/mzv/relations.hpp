#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"

namespace mzv {

enum class Flavor { Real, Finite };

/// A named identity instance: two formal sums asserted equal under some
/// evaluator (real zeta values, or finite ones prime-by-prime).
struct Relation {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Flavor flavor = Flavor::Real;
    FormalSum lhs;
    FormalSum rhs;

    /// Largest term weight on either side; finite verification excludes
    /// primes at or below this.
    int max_weight() const;
};

/// Generalized restricted sum formula, zeta_plus-normalized on both sides.
Relation grsf_sides(const Index& k, int t);

/// Same with {1}^s appended inside zeta_plus on both sides; s = 0 recovers
/// grsf_sides.
Relation grsf_ones_sides(const Index& k, int s, int t);

/// Classical sum formula instance: all admissible depth-u indices of weight
/// k sum to zeta(k). Requires k - u >= 1.
Relation sum_formula_sides(int k, int u);

/// Ohno-type relation. Real flavor applies zeta_plus to every term; finite
/// flavor emits bare indices.
Relation ohno_sides(const Index& k, int l, Flavor flavor);

/// Generalized restricted sum formula for finite multiple zeta values: same
/// combinatorics as grsf_sides without the zeta_plus shift.
Relation grsf_finite_sides(const Index& k, int t);

/// k_u = (k_1, ((k_2,...,k_{r-1}) shuffled with {1}^u), k_r); depth(k) >= 2.
FormalSum k_sub_u(const Index& k, int u);
FormalSum k_sub_u(const FormalSum& s, int u);

/// Sides of grsf_sides / ohno_sides, extended linearly over formal sums.
std::pair<FormalSum, FormalSum> f_sides(const Index& k, int t);
std::pair<FormalSum, FormalSum> f_sides(const FormalSum& s, int t);
std::pair<FormalSum, FormalSum> g_sides(const Index& k, int t);
std::pair<FormalSum, FormalSum> g_sides(const FormalSum& s, int t);

/// The two formal identities inside the lemma's proof:
/// f_R(k,t) == sum_l g_L(k_{t-l}, l) and f_L(k,t) == sum_u g_R(k_u, t-u).
bool lemma_first_check(const Index& k, int t);

/// g(k,t) == -sum_u (-1)^u f(k_u, t-u) with f = f_L - f_R, g = g_L - g_R.
bool lemma_second_check(const Index& k, int t);

/// F(k,s,t) = lhs - rhs of grsf_ones_sides; F(k,s,-1) = 0 by convention.
FormalSum grsf_ones_defect(const Index& k, int s, int t);

}  // namespace mzv
