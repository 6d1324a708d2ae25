#include <doctest.h>

#include <cmath>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {

// arctan(1/q) by the Taylor series, exact fixed-point partial sums.
BigFixed arctan_inv(long q, int frac_bits) {
    BigFixed acc(frac_bits);
    mpz_class qq = mpz_class(q) * q;
    BigFixed term = BigFixed::from_ratio(1, q, frac_bits);
    for (long n = 0; !term.is_zero(); ++n) {
        BigFixed contrib = term.div_int(2 * n + 1);
        if (n % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
        term = term.div_int(qq);
    }
    return acc;
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
BigFixed pi_machin(int frac_bits) {
    return arctan_inv(5, frac_bits).scaled_int(16) - arctan_inv(239, frac_bits).scaled_int(4);
}

// Direct truncated nested sum in long double; good to ~1e-3 or so
// depending on the leading exponent.
long double naive_mzv(const std::vector<int>& k, long N) {
    size_t r = k.size();
    std::vector<long double> acc(r + 1, 0.0L);
    acc[r] = 1.0L;
    for (long n = 1; n <= N; ++n) {
        for (size_t i = 0; i < r; ++i) {
            long double p = 1.0L;
            for (int e = 0; e < k[i]; ++e) p *= n;
            acc[i] += acc[i + 1] / p;
        }
    }
    return acc[0];
}

bool close(const BigFixed& a, const BigFixed& b, int tol_pow10) {
    BigFixed tol = BigFixed::pow10_inv(tol_pow10, a.frac_bits());
    return (a - b).abs() <= tol;
}

}  // namespace

TEST_CASE("zeta(2) equals pi^2/6") {
    const int fb = 192;
    RealEvaluator ev(fb);
    BigFixed pi = pi_machin(fb);
    BigFixed z2 = ev.mzv(Index{2});
    CHECK(close(z2.scaled_int(6), pi.mul(pi), 50));
}

TEST_CASE("classical evaluations") {
    RealEvaluator ev(192);
    CHECK(close(ev.mzv(Index{2, 1}), ev.mzv(Index{3}), 50));
    CHECK(close(ev.mzv(Index{4}), ev.mzv(Index{3, 1}) + ev.mzv(Index{2, 2}), 50));
    // zeta(4) = (2/5) zeta(2)^2
    BigFixed z2 = ev.mzv(Index{2});
    CHECK(close(ev.mzv(Index{4}).scaled_int(5), z2.mul(z2).scaled_int(2), 50));
    // zeta(2,1,1) = zeta(4)
    CHECK(close(ev.mzv(Index{2, 1, 1}), ev.mzv(Index{4}), 50));
}

TEST_CASE("star values") {
    RealEvaluator ev(128);
    CHECK(close(ev.mzv_star(Index{2}), ev.mzv(Index{2}), 30));
    CHECK(close(ev.mzv_star(Index{2, 1}), ev.mzv(Index{2, 1}) + ev.mzv(Index{3}), 30));
    CHECK(close(ev.mzv_star(Index{2, 1, 1}),
                ev.mzv(Index{2, 1, 1}) + ev.mzv(Index{3, 1}) + ev.mzv(Index{2, 2}) +
                    ev.mzv(Index{4}),
                30));
}

TEST_CASE("agreement with direct truncated sums") {
    RealEvaluator ev(128);
    std::vector<std::vector<int>> cases = {{2}, {3}, {2, 1}, {2, 2}, {3, 1, 2}, {3, 1, 1}};
    for (const auto& k : cases) {
        double hi = ev.mzv(Index(std::vector<int>(k))).to_double();
        double lo = static_cast<double>(naive_mzv(k, 20000));
        CHECK(std::fabs(hi - lo) < 1e-3);
    }
}

TEST_CASE("stuffle homomorphism numerically") {
    RealEvaluator ev(128);
    std::vector<std::pair<Index, Index>> cases = {
        {Index{2}, Index{3}}, {Index{2, 1}, Index{2}}, {Index{3, 1}, Index{2, 2}}};
    for (const auto& [k, l] : cases) {
        BigFixed prod = ev.mzv(k).mul(ev.mzv(l));
        BigFixed sum = ev.eval_sum(harmonic(k, l));
        CHECK(close(prod, sum, 25));
    }
}

TEST_CASE("precision scales with frac_bits") {
    RealEvaluator lo(96), hi(256);
    BigFixed a = lo.mzv(Index{3, 1, 2});
    BigFixed b = hi.mzv(Index{3, 1, 2}).rescaled(96);
    // |a - b| < 2^{-96+10}
    mpz_class ulp = mpz_class(1) << 10;
    CHECK((a - b).abs().mantissa() < ulp);
}

TEST_CASE("eval_sum rejects non-admissible terms") {
    RealEvaluator ev(96);
    FormalSum s;
    s.add_term(Index{1, 2}, 1);
    CHECK_THROWS_AS(ev.eval_sum(s), NotAdmissible);
    CHECK_THROWS_AS(ev.mzv(Index{1}), NotAdmissible);
    CHECK_THROWS_AS(ev.mzv_star(Index{1, 2}), NotAdmissible);
}

TEST_CASE("verify_real on known relations") {
    RealEvaluator ev(160);
    EvalReport ok = verify_real(grsf_sides(Index{1, 2}, 1), ev, 25);
    CHECK(ok.pass);

    EvalReport ohno = verify_real(ohno_sides(Index{2, 1}, 2, Flavor::Real), ev, 25);
    CHECK(ohno.pass);

    Relation bad = grsf_sides(Index{1, 2}, 1);
    bad.lhs.add_term(Index{5}, 1);  // corrupt one side
    EvalReport rep = verify_real(bad, ev, 25);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("default tolerance kicks in for tol_pow10 <= 0") {
    RealEvaluator ev(128);
    EvalReport rep = verify_real(sum_formula_sides(5, 2), ev, 0);
    CHECK(rep.pass);
    CHECK_FALSE(rep.tolerance.empty());
}
