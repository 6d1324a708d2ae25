#include "mzv/eval_real.hpp"

#include <algorithm>

#include "mzv/errors.hpp"
#include "mzv/poset.hpp"

namespace mzv {

namespace {

// tau: reverse the word and swap a <-> b.
Word word_dual(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (char& c : out) c = (c == 'a') ? 'b' : 'a';
    return out;
}

// Composition of a word ending in 'b' (leading 'b' allowed): s_i = 1 + run
// of a's before the i-th b.
std::vector<int> word_composition(const Word& w) {
    std::vector<int> comp;
    int run = 0;
    for (char c : w) {
        if (c == 'a') {
            ++run;
        } else {
            comp.push_back(run + 1);
            run = 0;
        }
    }
    return comp;
}

}  // namespace

RealEvaluator::RealEvaluator(int frac_bits) : frac_bits_(frac_bits) {
    if (frac_bits_ < 64) throw InvalidParams("frac_bits must be >= 64");
    work_bits_ = frac_bits_ + 24;
    cutoff_ = work_bits_ + 8;  // series tail below 2^{-cutoff+1}
}

// Li_{s_1,...,s_d}(1/2) = sum_{n_1>...>n_d>=1} 2^{-n_1} / prod n_i^{s_i},
// by one ascending pass over n_1 with nested partial-sum accumulators.
BigFixed RealEvaluator::polylog_half(const std::vector<int>& comp) const {
    const int d = static_cast<int>(comp.size());
    if (d == 0) return BigFixed::from_int(1, work_bits_);

    const mpz_class one_scaled = mpz_class(1) << work_bits_;
    // acc[j] = sum over n >= n_j > ... > n_d >= 1 (n = outer loop variable,
    // exclusive) of prod n_i^{-s_i}, for slots j = 2..d.
    std::vector<BigFixed> acc(static_cast<size_t>(std::max(0, d - 1)), BigFixed(work_bits_));
    BigFixed result(work_bits_);
    BigFixed half_pow = BigFixed::from_ratio(1, 2, work_bits_);  // 2^{-n}

    mpz_class npow;
    auto inv_pow = [&](long n, int s) {
        mpz_class base = n;
        mpz_pow_ui(npow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(s));
        return BigFixed::from_ratio(1, npow, work_bits_);
    };

    for (long n = 1; n <= cutoff_; ++n) {
        // contribution of n_1 = n uses inner sums truncated at n-1
        BigFixed term = half_pow.mul(inv_pow(n, comp.front()));
        if (d > 1) term = term.mul(acc[0]);
        result += term;
        // fold n into the inner accumulators, shallow to deep so each
        // update still sees the deeper sum truncated at n-1
        for (int j = 2; j <= d; ++j) {
            BigFixed upd = inv_pow(n, comp[static_cast<size_t>(j - 1)]);
            if (j < d) upd = upd.mul(acc[static_cast<size_t>(j - 1)]);
            acc[static_cast<size_t>(j - 2)] += upd;
        }
        half_pow = half_pow.div_int(2);
    }
    return result;
}

BigFixed RealEvaluator::mzv(const Index& k) {
    if (!k.admissible())
        throw NotAdmissible("mzv: index " + format_index(k) + " is not admissible");
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;

    const Word w = index_to_word(k);
    const int n = static_cast<int>(w.size());
    BigFixed total(work_bits_);
    for (int j = 0; j <= n; ++j) {
        BigFixed left = polylog_half(word_composition(word_dual(w.substr(0, static_cast<size_t>(j)))));
        BigFixed right = polylog_half(word_composition(w.substr(static_cast<size_t>(j))));
        total += left.mul(right);
    }
    BigFixed out = total.rescaled(frac_bits_);
    cache_.emplace(k, out);
    return out;
}

BigFixed RealEvaluator::mzv_star(const Index& k) {
    if (k.empty() || k.front() < 2)
        throw NotAdmissible("mzv_star: index " + format_index(k) + " is not admissible");
    return eval_sum(star_expand(k));
}

BigFixed RealEvaluator::eval_sum(const FormalSum& s) {
    BigFixed total(frac_bits_);
    for (const auto& [k, c] : s.terms()) {
        if (!k.admissible())
            throw NotAdmissible("eval_sum: term " + format_index(k) + " is not admissible");
        total += mzv(k).scaled_int(c);
    }
    return total;
}

EvalReport verify_real(const Relation& rel, RealEvaluator& ev, int tol_pow10) {
    const int fb = ev.frac_bits();
    BigFixed lhs = ev.eval_sum(rel.lhs);
    BigFixed rhs = ev.eval_sum(rel.rhs);
    BigFixed diff = (lhs - rhs).abs();
    BigFixed tol = tol_pow10 > 0 ? BigFixed::pow10_inv(tol_pow10, fb)
                                 : BigFixed::from_ratio(1, mpz_class(1) << (fb / 2), fb);

    const int digits = fb * 30100 / 100000;  // ~log10(2^fb)
    EvalReport rep;
    rep.name = rel.name;
    rep.params = rel.params;
    rep.lhs_value = lhs.to_decimal(digits);
    rep.rhs_value = rhs.to_decimal(digits);
    rep.abs_diff = diff.to_decimal(digits);
    rep.tolerance = tol.to_decimal(digits);
    rep.pass = diff <= tol;
    return rep;
}

}  // namespace mzv
