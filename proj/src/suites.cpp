#include "mzv/suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/poset.hpp"

namespace mzv {

namespace oracle {

uint64_t brute_zeta_p(const Index& k, uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    const int r = k.depth();
    std::vector<uint64_t> inv(p, 0);
    for (uint64_t n = 1; n < p; ++n) {
        uint64_t acc = 1, base = n, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        inv[n] = acc;
    }
    auto pow_mod = [&](uint64_t x, int e) {
        uint64_t acc = 1;
        for (int i = 0; i < e; ++i) acc = acc * x % p;
        return acc;
    };
    uint64_t total = 0;
    auto rec = [&](auto&& self, int slot, uint64_t prev, uint64_t prod) -> void {
        if (slot == r) {
            total = (total + prod) % p;
            return;
        }
        for (uint64_t n = 1; n < prev; ++n)
            self(self, slot + 1, n, prod * pow_mod(inv[n], k.parts()[static_cast<size_t>(slot)]) % p);
    };
    rec(rec, 0, p, 1);
    return total;
}

uint64_t brute_zeta_p_star(const Index& k, uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    const int r = k.depth();
    std::vector<uint64_t> inv(p, 0);
    for (uint64_t n = 1; n < p; ++n) {
        uint64_t acc = 1, base = n, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        inv[n] = acc;
    }
    auto pow_mod = [&](uint64_t x, int e) {
        uint64_t acc = 1;
        for (int i = 0; i < e; ++i) acc = acc * x % p;
        return acc;
    };
    uint64_t total = 0;
    auto rec = [&](auto&& self, int slot, uint64_t prev, uint64_t prod) -> void {
        if (slot == r) {
            total = (total + prod) % p;
            return;
        }
        for (uint64_t n = 1; n <= prev; ++n)
            self(self, slot + 1, n, prod * pow_mod(inv[n], k.parts()[static_cast<size_t>(slot)]) % p);
    };
    rec(rec, 0, p - 1, 1);
    return total;
}

long double naive_mzv(const Index& k, long n_max) {
    // One ascending pass with nested partial sums; still the plain
    // truncation of the defining series at n_1 <= n_max.
    const int r = k.depth();
    std::vector<long double> acc(static_cast<size_t>(r), 0.0L);
    for (long n = 1; n <= n_max; ++n) {
        for (int j = 0; j < r; ++j) {
            long double inner = (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : 1.0L;
            acc[static_cast<size_t>(j)] +=
                inner / powl(static_cast<long double>(n), k.parts()[static_cast<size_t>(j)]);
        }
    }
    return acc[0];
}

}  // namespace oracle

namespace {

std::vector<Index> all_indices(int max_weight, int max_depth, int max_part) {
    std::vector<Index> out;
    for (int w = 1; w <= max_weight; ++w)
        for (int d = 1; d <= std::min(w, max_depth); ++d)
            for (const auto& c : compositions(w, d, 1)) {
                bool ok = true;
                for (int p : c) ok = ok && p <= max_part;
                if (ok) out.emplace_back(c);
            }
    return out;
}

std::vector<Index> index_family_depth_parts(int max_depth, int max_part, int min_depth = 1) {
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth >= min_depth) out.emplace_back(cur);
        if (depth == max_depth) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    // drop empty
    std::vector<Index> nonempty;
    for (auto& k : out)
        if (!k.empty()) nonempty.push_back(std::move(k));
    return nonempty;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string describe(const Relation& rel) {
    std::ostringstream os;
    os << rel.name << "(";
    bool first = true;
    for (const auto& [key, value] : rel.params) {
        if (!first) os << ",";
        os << key << "=" << value;
        first = false;
    }
    os << ")";
    return os.str();
}

CriterionResult worked_example(const SuiteConfig&) {
    Relation rel = grsf_sides(Index{1, 2}, 1);
    FormalSum lhs_expected, rhs_expected;
    lhs_expected.add_term(Index{2, 1, 2}, 2);
    lhs_expected.add_term(Index{2, 2, 1}, 1);
    rhs_expected.add_term(Index{2, 3}, 1);
    rhs_expected.add_term(Index{3, 2}, 1);
    rhs_expected.add_term(Index{2, 1, 2}, 1);
    bool ok = rel.lhs == lhs_expected && rel.rhs == rhs_expected;
    return {1, "worked example grsf k=(1,2) t=1", ok,
            ok ? "exact match" : "got lhs=" + rel.lhs.str() + " rhs=" + rel.rhs.str()};
}

CriterionResult grsf_real_sweep(const SuiteConfig& cfg) {
    RealEvaluator ev(cfg.frac_bits);
    int checked = 0;
    for (const Index& k : index_family_depth_parts(3, 3)) {
        for (int t = 0; t <= 2; ++t) {
            if (k.weight() + t + 1 > 10) continue;
            EvalReport rep = verify_real(grsf_sides(k, t), ev, 25);
            ++checked;
            if (!rep.pass)
                return {2, "grsf/grsf-ones real sweep", false,
                        "grsf k=" + format_index(k) + " t=" + std::to_string(t) +
                            " diff=" + rep.abs_diff};
            for (int s = 0; s <= 2; ++s) {
                if (k.weight() + s + t + 1 > 10) continue;
                EvalReport rep2 = verify_real(grsf_ones_sides(k, s, t), ev, 25);
                ++checked;
                if (!rep2.pass)
                    return {2, "grsf/grsf-ones real sweep", false,
                            "grsf-ones k=" + format_index(k) + " s=" + std::to_string(s) +
                                " t=" + std::to_string(t) + " diff=" + rep2.abs_diff};
            }
        }
    }
    return {2, "grsf/grsf-ones real sweep", true,
            std::to_string(checked) + " relations at 1e-25"};
}

CriterionResult grsf_finite_sweep(const SuiteConfig& cfg) {
    FiniteEvaluator ev;
    int checked = 0;
    for (const Index& k : index_family_depth_parts(3, 3)) {
        for (int t = 0; t <= 2; ++t) {
            Relation rel = grsf_finite_sides(k, t);
            FiniteReport rep =
                verify_finite(rel, static_cast<uint64_t>(rel.max_weight()) + 1, cfg.prime_max, ev);
            ++checked;
            if (!rep.pass)
                return {3, "grsf finite sweep", false,
                        describe(rel) + " fails at p=" + std::to_string(rep.failing_primes.front())};
        }
    }
    return {3, "grsf finite sweep", true,
            std::to_string(checked) + " relations, primes <= " + std::to_string(cfg.prime_max)};
}

CriterionResult ohno_sweep(const SuiteConfig& cfg) {
    RealEvaluator rev(cfg.frac_bits);
    FiniteEvaluator fev;
    int checked = 0;
    for (const Index& k : index_family_depth_parts(3, 3)) {
        for (int l = 0; l <= 3; ++l) {
            EvalReport rep = verify_real(ohno_sides(k, l, Flavor::Real), rev, 25);
            Relation fin = ohno_sides(k, l, Flavor::Finite);
            FiniteReport frep =
                verify_finite(fin, static_cast<uint64_t>(fin.max_weight()) + 1, cfg.prime_max, fev);
            checked += 2;
            if (!rep.pass)
                return {4, "ohno-type sweep", false,
                        "real k=" + format_index(k) + " l=" + std::to_string(l) +
                            " diff=" + rep.abs_diff};
            if (!frep.pass)
                return {4, "ohno-type sweep", false,
                        "finite k=" + format_index(k) + " l=" + std::to_string(l) + " fails at p=" +
                            std::to_string(frep.failing_primes.front())};
        }
    }
    // closed instance zeta(4) = zeta(2,2) + zeta(3,1) at 1e-40
    EvalReport closed = verify_real(ohno_sides(Index{2}, 1, Flavor::Real), rev, 40);
    if (!closed.pass) return {4, "ohno-type sweep", false, "zeta(4) instance diff=" + closed.abs_diff};
    return {4, "ohno-type sweep", true, std::to_string(checked + 1) + " checks"};
}

CriterionResult lemma_suite(const SuiteConfig&) {
    int checked = 0;
    for (const Index& k : index_family_depth_parts(4, 3, 2)) {
        for (int t = 0; t <= 3; ++t) {
            ++checked;
            if (!lemma_first_check(k, t))
                return {5, "lemma formal identities", false,
                        "first identity fails for k=" + format_index(k) + " t=" + std::to_string(t)};
            if (!lemma_second_check(k, t))
                return {5, "lemma formal identities", false,
                        "second identity fails for k=" + format_index(k) + " t=" + std::to_string(t)};
        }
    }
    // binomial property (k_u)_{u'} == C(u+u',u) * k_{u+u'} on random inputs
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> depth_d(2, 5), part_d(1, 3), u_d(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> parts(static_cast<size_t>(depth_d(rng)));
        for (int& p : parts) p = part_d(rng);
        Index k(parts);
        int u = u_d(rng), v = u_d(rng);
        FormalSum lhs = k_sub_u(k_sub_u(k, u), v);
        FormalSum rhs = k_sub_u(k, u + v).scaled(binom(u + v, u));
        if (lhs != rhs)
            return {5, "lemma formal identities", false,
                    "(k_u)_{u'} binomial fails for k=" + format_index(k) + " u=" +
                        std::to_string(u) + " u'=" + std::to_string(v)};
    }
    return {5, "lemma formal identities", true,
            std::to_string(checked) + " (k,t) pairs + 1000 binomial trials"};
}

CriterionResult equivalence_suite(const SuiteConfig&) {
    int checked = 0;
    for (const Index& k : all_indices(4, 4, 4)) {
        for (int s = 0; s <= 2; ++s) {
            for (int t = 0; t <= 2; ++t) {
                Index k1 = concat(k, Index::ones(1));
                FormalSum lhs = grsf_ones_defect(k, s + 1, t);
                FormalSum rhs = grsf_ones_defect(k1, s, t) - grsf_ones_defect(k1, s + 1, t - 1);
                ++checked;
                if (lhs != rhs)
                    return {6, "equivalence bootstrap recursion", false,
                            "k=" + format_index(k) + " s=" + std::to_string(s) +
                                " t=" + std::to_string(t)};
            }
        }
    }
    return {6, "equivalence bootstrap recursion", true, std::to_string(checked) + " triples"};
}

CriterionResult integral_series_suite(const SuiteConfig& cfg) {
    RealEvaluator rev(cfg.frac_bits);
    FiniteEvaluator fev;
    int checked = 0;
    for (const Index& k : all_indices(4, 3, 4)) {
        for (const Index& l : all_indices(4, 3, 4)) {
            auto [integral, series] = integral_series_sides(k, l);
            ++checked;
            bool admissible = true;
            for (const auto& [idx, c] : integral.terms()) admissible = admissible && idx.admissible();
            for (const auto& [idx, c] : series.terms()) admissible = admissible && idx.admissible();
            if (admissible) {
                BigFixed diff = (rev.eval_sum(integral) - rev.eval_sum(series)).abs();
                if (!(diff <= BigFixed::pow10_inv(25, cfg.frac_bits)))
                    return {7, "integral-series identity", false,
                            "numeric k=" + format_index(k) + " l=" + format_index(l)};
            } else {
                FormalSum d = integral - series;
                for (uint64_t p : primes_in_range(51, 200))
                    if (fev.eval_sum_mod(d, p) != 0)
                        return {7, "integral-series identity", false,
                                "mod-p k=" + format_index(k) + " l=" + format_index(l) +
                                    " p=" + std::to_string(p)};
            }
        }
    }
    // binomial expansion of mu((k,{1}^s), ({1}^{t+1})) as exact formal sums
    int expansions = 0;
    for (const Index& k : all_indices(4, 2, 4)) {
        for (int s = 0; s <= 2; ++s) {
            for (int t = 0; t <= 2; ++t) {
                FormalSum lhs = expand_poset(mu(concat(k, Index::ones(s)), Index::ones(t + 1)));
                FormalSum rhs;
                for (int j = 0; j <= t; ++j)
                    rhs += grsf_ones_sides(k, s + j, t - j).lhs.scaled(binom(s + j, s));
                ++expansions;
                if (lhs != rhs)
                    return {7, "integral-series identity", false,
                            "poset expansion k=" + format_index(k) + " s=" + std::to_string(s) +
                                " t=" + std::to_string(t)};
            }
        }
    }
    return {7, "integral-series identity", true,
            std::to_string(checked) + " (k,l) pairs + " + std::to_string(expansions) +
                " poset expansions"};
}

CriterionResult sum_formula_suite(const SuiteConfig& cfg) {
    RealEvaluator ev(cfg.frac_bits);
    int checked = 0;
    for (int k = 3; k <= 8; ++k) {
        for (int u = 1; u <= k - 1; ++u) {
            EvalReport rep = verify_real(sum_formula_sides(k, u), ev, 25);
            ++checked;
            if (!rep.pass)
                return {8, "sum formula", false,
                        "k=" + std::to_string(k) + " u=" + std::to_string(u) +
                            " diff=" + rep.abs_diff};
        }
    }
    return {8, "sum formula", true, std::to_string(checked) + " (k,u) pairs at 1e-25"};
}

CriterionResult oracle_suite(const SuiteConfig& cfg) {
    // zeta_p against brute force
    FiniteEvaluator fev;
    for (uint64_t p : primes_in_range(2, 31))
        for (const Index& k : all_indices(5, 5, 5))
            if (fev.zeta_p(k, p) != oracle::brute_zeta_p(k, p))
                return {9, "oracle suites", false,
                        "zeta_p mismatch k=" + format_index(k) + " p=" + std::to_string(p)};

    // mzv against naive truncation
    RealEvaluator rev(cfg.frac_bits);
    for (const Index& k : {Index{2}, Index{3}, Index{2, 1}, Index{2, 2}, Index{3, 1, 2}, Index{2, 1, 1}}) {
        long double naive = oracle::naive_mzv(k, 200000);
        double got = rev.mzv(k).to_double();
        if (std::fabs(static_cast<double>(naive) - got) > 1e-3)
            return {9, "oracle suites", false, "naive-sum mismatch k=" + format_index(k)};
    }

    // stuffle homomorphism: exact mod p, and over the reals to tolerance
    auto small = all_indices(5, 5, 5);
    for (uint64_t p : {7ULL, 31ULL, 97ULL})
        for (const Index& k : small)
            for (const Index& l : small) {
                uint64_t lhs = fev.zeta_p(k, p) * fev.zeta_p(l, p) % p;
                if (lhs != fev.eval_sum_mod(harmonic(k, l), p))
                    return {9, "oracle suites", false,
                            "stuffle mod p fails k=" + format_index(k) + " l=" + format_index(l) +
                                " p=" + std::to_string(p)};
            }
    BigFixed tol = BigFixed::pow10_inv(25, cfg.frac_bits);
    for (const Index& k : all_indices(5, 4, 5))
        for (const Index& l : all_indices(5, 4, 5)) {
            if (!k.admissible() || !l.admissible()) continue;
            BigFixed diff = (rev.mzv(k).mul(rev.mzv(l)) - rev.eval_sum(harmonic(k, l))).abs();
            if (!(diff <= tol))
                return {9, "oracle suites", false,
                        "stuffle real fails k=" + format_index(k) + " l=" + format_index(l)};
        }

    // Hoffman dual involution, exhaustive to weight 12
    int count = 0;
    for (const Index& k : all_indices(12, 12, 12)) {
        ++count;
        if (hoffman_dual(hoffman_dual(k)) != k)
            return {9, "oracle suites", false, "dual involution fails k=" + format_index(k)};
        if (hoffman_dual(k).weight() != k.weight() ||
            hoffman_dual(k).depth() != k.weight() - k.depth() + 1)
            return {9, "oracle suites", false, "dual weight/depth fails k=" + format_index(k)};
    }
    return {9, "oracle suites", true, "all oracles agree (" + std::to_string(count) + " duals)"};
}

CriterionResult negative_controls(const SuiteConfig& cfg) {
    Relation rel = grsf_sides(Index{1, 2}, 1);
    Relation corrupted = rel;
    corrupted.lhs.add_term(rel.lhs.terms().begin()->first, 1);

    bool symbolic_fail = !(corrupted.lhs == corrupted.rhs);

    RealEvaluator rev(cfg.frac_bits);
    EvalReport rrep = verify_real(corrupted, rev, 25);

    Relation fin = grsf_finite_sides(Index{1, 2}, 1);
    fin.lhs.add_term(fin.lhs.terms().begin()->first, 1);
    FiniteEvaluator fev;
    FiniteReport frep = verify_finite(fin, static_cast<uint64_t>(fin.max_weight()) + 1, 200, fev);

    bool ok = symbolic_fail && !rrep.pass && !frep.pass && !frep.failing_primes.empty();
    return {10, "negative controls", ok,
            ok ? "corrupted relations fail in all three modes"
               : "a corrupted relation slipped through"};
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteConfig& cfg) {
    switch (id) {
        case 1: return worked_example(cfg);
        case 2: return grsf_real_sweep(cfg);
        case 3: return grsf_finite_sweep(cfg);
        case 4: return ohno_sweep(cfg);
        case 5: return lemma_suite(cfg);
        case 6: return equivalence_suite(cfg);
        case 7: return integral_series_suite(cfg);
        case 8: return sum_formula_suite(cfg);
        case 9: return oracle_suite(cfg);
        case 10: return negative_controls(cfg);
        default: throw InvalidParams("no criterion " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_suite(const std::string& which, const SuiteConfig& cfg) {
    std::vector<int> ids;
    if (which == "lemma")
        ids = {5};
    else if (which == "equivalence")
        ids = {6};
    else if (which == "integral-series")
        ids = {7};
    else if (which == "all")
        ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    else
        throw InvalidParams("unknown suite '" + which + "'");
    std::vector<CriterionResult> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(run_criterion(id, cfg));
    return out;
}

}  // namespace mzv
