#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// A composition (k_1,...,k_r) of positive integers; the argument of every
/// zeta symbol. The empty index is a legal value.
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> parts);
    Index(std::initializer_list<int> parts);

    /// (1,1,...,1) with m parts; m = 0 gives the empty index.
    static Index ones(int m);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int depth() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// First part >= 2, so the nested series converges.
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    int front() const { return parts_.front(); }
    Index tail() const;  // (k_2,...,k_r)

    friend bool operator==(const Index&, const Index&) = default;

private:
    std::vector<int> parts_;
};

/// Order by (weight, depth, lexicographic parts); the canonical term order
/// of every formal sum and golden file.
struct CanonicalLess {
    bool operator()(const Index& a, const Index& b) const;
};

/// Componentwise shift (e_1,...,e_r), entries >= 0.
using ExponentVector = std::vector<int>;

Index add(const Index& k, const ExponentVector& e);

/// (k_1+1, k_2,...,k_r); always admissible.
Index zeta_plus(const Index& k);

/// Hoffman's dual: write k as its weight-|k| string of 1s with "+" inside
/// parts and "," between parts, swap the two separators, read back.
Index hoffman_dual(const Index& k);

/// All length-`parts` vectors of integers >= min_part summing to `total`,
/// ascending lexicographic. Empty when infeasible.
std::vector<ExponentVector> compositions(int total, int parts, int min_part);

Index concat(const Index& a, const Index& b);
Index with_prefix(int k1, const Index& rest);

Index parse_index(std::string_view text);
std::string format_index(const Index& k);

}  // namespace mzv
