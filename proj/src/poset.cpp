#include "mzv/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>

#include "mzv/errors.hpp"

namespace mzv {

bool word_admissible(const Word& w) {
    if (w.empty()) return true;
    return w.front() == 'a' && w.back() == 'b';
}

Word index_to_word(const Index& k) {
    if (!k.admissible()) throw NotAdmissible("index_to_word: " + format_index(k) + " is not admissible");
    Word w;
    for (int p : k.parts()) {
        w.append(static_cast<size_t>(p - 1), 'a');
        w.push_back('b');
    }
    return w;
}

Index word_to_index(const Word& w) {
    if (!word_admissible(w)) throw NotAdmissible("word_to_index: '" + w + "' is not admissible");
    std::vector<int> parts;
    int run = 0;
    for (char c : w) {
        if (c == 'a') {
            ++run;
        } else if (c == 'b') {
            parts.push_back(run + 1);
            run = 0;
        } else {
            throw ParseError("word letters must be 'a' or 'b'");
        }
    }
    return Index(std::move(parts));
}

TwoPoset::TwoPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> labels)
    : n_(n), covers_(std::move(covers)), labels_(std::move(labels)) {
    if (n_ < 0 || labels_.size() != static_cast<size_t>(n_))
        throw InvalidParams("poset labels must have one entry per element");
    for (int l : labels_)
        if (l != 0 && l != 1) throw InvalidParams("poset labels must be 0 or 1");
    for (auto [lo, hi] : covers_)
        if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_ || lo == hi)
            throw InvalidParams("poset cover out of range");

    // Transitive closure; cycle check via the diagonal.
    reach_.assign(static_cast<size_t>(n_), std::vector<char>(static_cast<size_t>(n_), 0));
    for (auto [lo, hi] : covers_) reach_[static_cast<size_t>(lo)][static_cast<size_t>(hi)] = 1;
    for (int m = 0; m < n_; ++m)
        for (int x = 0; x < n_; ++x)
            if (reach_[static_cast<size_t>(x)][static_cast<size_t>(m)])
                for (int y = 0; y < n_; ++y)
                    if (reach_[static_cast<size_t>(m)][static_cast<size_t>(y)])
                        reach_[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1;
    for (int x = 0; x < n_; ++x)
        if (reach_[static_cast<size_t>(x)][static_cast<size_t>(x)])
            throw InvalidParams("poset order relation is cyclic");
}

bool TwoPoset::below(int x, int y) const {
    return reach_[static_cast<size_t>(x)][static_cast<size_t>(y)] != 0;
}

bool TwoPoset::admissible() const {
    for (int x = 0; x < n_; ++x) {
        bool maximal = true, minimal = true;
        for (int y = 0; y < n_; ++y) {
            if (below(x, y)) maximal = false;
            if (below(y, x)) minimal = false;
        }
        if (maximal && label(x) != 0) return false;
        if (minimal && label(x) != 1) return false;
    }
    return true;
}

TwoPoset mu(const Index& k, const Index& l) {
    if (k.empty() || l.empty()) throw EmptyIndex("mu(k,l) needs non-empty indices");
    std::vector<std::pair<int, int>> covers;
    std::vector<int> labels;
    int top = -1;  // current top of the chain / branch being grown

    auto push = [&](int label) {
        labels.push_back(label);
        int id = static_cast<int>(labels.size()) - 1;
        if (top >= 0) covers.emplace_back(top, id);
        top = id;
        return id;
    };

    // Main chain, bottom to top: k_r, ..., k_1, each one bullet then
    // k_i - 1 circles; then the l_1 circles.
    for (int i = k.depth() - 1; i >= 0; --i) {
        push(1);
        for (int j = 0; j < k.parts()[static_cast<size_t>(i)] - 1; ++j) push(0);
    }
    for (int j = 0; j < l.parts().front(); ++j) push(0);

    // Each later l_i hangs below the previous branch top: one bullet, then
    // l_i - 1 circles above it.
    for (int i = 1; i < l.depth(); ++i) {
        int prev_top = top;
        labels.push_back(1);
        int bullet = static_cast<int>(labels.size()) - 1;
        covers.emplace_back(bullet, prev_top);
        top = bullet;
        for (int j = 0; j < l.parts()[static_cast<size_t>(i)] - 1; ++j) push(0);
    }

    const int n = static_cast<int>(labels.size());
    return TwoPoset(n, std::move(covers), std::move(labels));
}

namespace {

// Expansions of the sub-poset induced on `mask`, each word read from the
// maximum down. Memoized: the mu posets are near-chains, so few distinct
// masks are reachable even though the worst case is exponential.
using SuffixMap = std::map<Word, long long>;

const SuffixMap& expand_rec(const TwoPoset& x, uint64_t mask,
                            std::unordered_map<uint64_t, SuffixMap>& memo) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    SuffixMap out;
    if (mask == 0) {
        out.emplace(Word{}, 1);
    } else {
        for (int e = 0; e < x.size(); ++e) {
            if (!(mask & (uint64_t{1} << e))) continue;
            bool maximal = true;
            for (int y = 0; y < x.size() && maximal; ++y)
                if ((mask & (uint64_t{1} << y)) && x.below(e, y)) maximal = false;
            if (!maximal) continue;
            char letter = x.label(e) == 0 ? 'a' : 'b';
            for (const auto& [w, c] : expand_rec(x, mask & ~(uint64_t{1} << e), memo))
                out[letter + w] += c;
        }
    }
    return memo.emplace(mask, std::move(out)).first->second;
}

}  // namespace

FormalSum expand_poset(const TwoPoset& x) {
    if (!x.admissible()) throw NotAdmissible("expand_poset: poset is not admissible");
    if (x.size() > 62) throw InvalidParams("expand_poset: poset too large");
    std::unordered_map<uint64_t, SuffixMap> memo;
    uint64_t all = x.size() == 0 ? 0 : (~uint64_t{0} >> (64 - x.size()));
    FormalSum out;
    for (const auto& [w, c] : expand_rec(x, all, memo)) out.add_term(word_to_index(w), c);
    return out;
}

long long count_linear_extensions(const TwoPoset& x) {
    if (x.size() > 62) throw InvalidParams("count_linear_extensions: poset too large");
    // Same recursion, counting only.
    std::unordered_map<uint64_t, long long> memo;
    auto rec = [&](auto&& self, uint64_t mask) -> long long {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (int e = 0; e < x.size(); ++e) {
            if (!(mask & (uint64_t{1} << e))) continue;
            bool maximal = true;
            for (int y = 0; y < x.size() && maximal; ++y)
                if ((mask & (uint64_t{1} << y)) && x.below(e, y)) maximal = false;
            if (maximal) total += self(self, mask & ~(uint64_t{1} << e));
        }
        memo.emplace(mask, total);
        return total;
    };
    uint64_t all = x.size() == 0 ? 0 : (~uint64_t{0} >> (64 - x.size()));
    return rec(rec, all);
}

std::pair<FormalSum, FormalSum> integral_series_sides(const Index& k, const Index& l) {
    FormalSum integral_side = expand_poset(mu(k, l));
    FormalSum series_side = circled_harmonic(FormalSum::term(k), star_expand(l));
    return {std::move(integral_side), std::move(series_side)};
}

TwoPoset parse_poset(const std::string& text) {
    // "n; 0<1,1<2; 110"
    auto semi1 = text.find(';');
    auto semi2 = text.find(';', semi1 == std::string::npos ? semi1 : semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
        throw ParseError("poset format is 'n; i<j,...; labels'");
    auto strip = [](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        return s;
    };
    std::string ns = strip(text.substr(0, semi1));
    std::string pairs = strip(text.substr(semi1 + 1, semi2 - semi1 - 1));
    std::string bits = strip(text.substr(semi2 + 1));
    int n = 0;
    try {
        n = std::stoi(ns);
    } catch (const std::exception&) {
        throw ParseError("bad element count '" + ns + "'");
    }
    std::vector<std::pair<int, int>> covers;
    std::istringstream ps(pairs);
    std::string item;
    while (std::getline(ps, item, ',')) {
        if (item.empty()) continue;
        auto lt = item.find('<');
        if (lt == std::string::npos) throw ParseError("bad cover '" + item + "', expected i<j");
        try {
            covers.emplace_back(std::stoi(item.substr(0, lt)), std::stoi(item.substr(lt + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad cover '" + item + "'");
        }
    }
    if (bits.size() != static_cast<size_t>(n))
        throw ParseError("labels bitstring must have length n");
    std::vector<int> labels;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("labels must be 0/1");
        labels.push_back(c - '0');
    }
    try {
        return TwoPoset(n, std::move(covers), std::move(labels));
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

std::string format_poset(const TwoPoset& x) {
    std::ostringstream os;
    os << x.size() << "; ";
    for (size_t i = 0; i < x.covers().size(); ++i) {
        if (i) os << ',';
        os << x.covers()[i].first << '<' << x.covers()[i].second;
    }
    os << "; ";
    for (int e = 0; e < x.size(); ++e) os << x.label(e);
    return os.str();
}

}  // namespace mzv
