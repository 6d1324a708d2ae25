#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzv/formal_sum.hpp"
#include "mzv/index.hpp"

namespace mzv {

/// Iterated-integral word over {a, b}: a = dt/t, b = dt/(1-t), read from the
/// largest integration variable down. Admissible iff it starts with 'a' and
/// ends with 'b' (or is empty).
using Word = std::string;

bool word_admissible(const Word& w);

/// k -> a^{k_1-1} b a^{k_2-1} b ... a^{k_r-1} b, for admissible k.
Word index_to_word(const Index& k);
Index word_to_index(const Word& w);

/// A finite poset with {0,1} labels, given by covering relations on
/// elements 0..n-1. Admissible iff every maximal element is 0-labeled and
/// every minimal element is 1-labeled.
class TwoPoset {
public:
    TwoPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> labels);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int label(int x) const { return labels_[static_cast<size_t>(x)]; }

    bool admissible() const;

    /// x < y in the generated partial order.
    bool below(int x, int y) const;

private:
    int n_;
    std::vector<std::pair<int, int>> covers_;  // (lower, upper)
    std::vector<int> labels_;
    std::vector<std::vector<char>> reach_;  // reach_[x][y]: x < y
};

/// The 2-poset whose integral equals zeta(k (*) l*): the k-chain with the
/// l_1 circles on top, and each later l_i hanging from the previous branch
/// top as one bullet plus l_i - 1 circles.
TwoPoset mu(const Index& k, const Index& l);

/// Sum of word_to_index over all linear extensions, each read from its
/// maximum down. Requires an admissible poset; every extension then yields
/// an admissible word.
FormalSum expand_poset(const TwoPoset& x);

long long count_linear_extensions(const TwoPoset& x);

/// (expand_poset(mu(k,l)), k (*) l* expanded bilinearly). The two sides
/// evaluate equally as zeta values.
std::pair<FormalSum, FormalSum> integral_series_sides(const Index& k, const Index& l);

/// Text format "n; i<j,i<j,...; labels" with labels a length-n bitstring.
TwoPoset parse_poset(const std::string& text);
std::string format_poset(const TwoPoset& x);

}  // namespace mzv
