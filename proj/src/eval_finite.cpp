#include "mzv/eval_finite.hpp"

#include <algorithm>

#include "mzv/errors.hpp"

namespace mzv {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

namespace {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

const std::vector<uint64_t>& FiniteEvaluator::inv_pows(uint64_t p, int k) {
    auto key = std::make_pair(p, k);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    // n^{-k} = n^{p-1-(k mod (p-1))} by Fermat
    uint64_t e = p - 1 - (static_cast<uint64_t>(k) % (p - 1));
    std::vector<uint64_t> table(p, 0);
    for (uint64_t n = 1; n < p; ++n) table[n] = mod_pow(n, e, p);
    return tables_.emplace(key, std::move(table)).first->second;
}

uint64_t FiniteEvaluator::zeta_p(const Index& k, uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k.empty()) return 1 % p;
    auto key = std::make_pair(p, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = k.depth();
    std::vector<const std::vector<uint64_t>*> pows;
    pows.reserve(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) pows.push_back(&inv_pows(p, k.parts()[static_cast<size_t>(j)]));

    // acc[j] = sum over n >= n_{j+1} > ... > n_r >= 1, updated shallow to
    // deep so every slot keeps the strict inequality with its neighbor.
    std::vector<uint64_t> acc(static_cast<size_t>(r), 0);
    for (uint64_t n = 1; n < p; ++n) {
        for (int j = 0; j < r; ++j) {
            uint64_t inner = (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : 1;
            acc[static_cast<size_t>(j)] =
                (acc[static_cast<size_t>(j)] + (*pows[static_cast<size_t>(j)])[n] * inner) % p;
        }
    }
    uint64_t result = acc[0];
    memo_.emplace(key, result);
    return result;
}

uint64_t FiniteEvaluator::zeta_p_star(const Index& k, uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k.empty()) return 1 % p;
    return eval_sum_mod(star_expand(k), p);
}

uint64_t FiniteEvaluator::eval_sum_mod(const FormalSum& s, uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    uint64_t total = 0;
    for (const auto& [k, c] : s.terms()) {
        uint64_t coef = static_cast<uint64_t>(((c % static_cast<long long>(p)) +
                                               static_cast<long long>(p)) %
                                              static_cast<long long>(p));
        total = (total + coef * zeta_p(k, p)) % p;
    }
    return total;
}

FiniteReport verify_finite(const Relation& rel, uint64_t lo, uint64_t hi, FiniteEvaluator& ev) {
    FiniteReport rep;
    rep.name = rel.name;
    rep.params = rel.params;
    const int weight = rel.max_weight();
    for (uint64_t p : primes_in_range(lo, hi)) {
        uint64_t l = ev.eval_sum_mod(rel.lhs, p);
        uint64_t r = ev.eval_sum_mod(rel.rhs, p);
        rep.lhs.residues[p] = l;
        rep.rhs.residues[p] = r;
        if (l != r) {
            // Identities in the quotient ring tolerate finitely many small
            // primes; anything above the weight is a genuine failure.
            if (p > static_cast<uint64_t>(weight))
                rep.failing_primes.push_back(p);
            else
                rep.small_prime_exceptions.push_back(p);
        }
    }
    rep.pass = rep.failing_primes.empty();
    return rep;
}

}  // namespace mzv
