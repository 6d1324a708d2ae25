#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mzv/index.hpp"

namespace mzv {

/// Integer-coefficient linear combination of indices, kept in canonical
/// (weight, depth, lex) order with no zero coefficients stored.
class FormalSum {
public:
    using Terms = std::map<Index, long long, CanonicalLess>;

    FormalSum() = default;

    /// Single term c * k (dropped if c == 0).
    static FormalSum term(const Index& k, long long c = 1);

    void add_term(const Index& k, long long c);

    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool zero() const { return terms_.empty(); }

    /// Sum of all coefficients (total multiplicity).
    long long total_coefficient() const;

    FormalSum& operator+=(const FormalSum& rhs);
    FormalSum& operator-=(const FormalSum& rhs);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    FormalSum scaled(long long c) const;

    std::string str() const;  // e.g. "2*(2,1,2) + (2,2,1)"

private:
    Terms terms_;
};

/// Harmonic (stuffle) product, the inductive three-term recursion.
FormalSum harmonic(const Index& k, const Index& l);
FormalSum harmonic(const FormalSum& a, const FormalSum& b);

/// Circled harmonic product: fuse the leading entries, stuffle the tails.
/// Both arguments must be non-empty.
FormalSum circled_harmonic(const Index& k, const Index& l);
FormalSum circled_harmonic(const FormalSum& a, const FormalSum& b);

/// k* : the 2^{r-1}-term sum over replacing each comma by "," or "+".
FormalSum star_expand(const Index& k);

/// All order-preserving interleavings of k and l, with multiplicity.
FormalSum naive_shuffle(const Index& k, const Index& l);

/// zeta_plus applied termwise, merging collisions.
FormalSum zeta_plus_sum(const FormalSum& s);

}  // namespace mzv
