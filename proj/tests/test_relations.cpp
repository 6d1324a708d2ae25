#include <doctest.h>

#include <random>

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Index> indices(int max_w, int max_d, int max_part) {
    std::vector<Index> out;
    for (int w = 1; w <= max_w; ++w)
        for (int d = 1; d <= std::min(w, max_d); ++d)
            for (const auto& c : compositions(w, d, 1)) {
                bool ok = true;
                for (int p : c) ok = ok && p <= max_part;
                if (ok) out.emplace_back(c);
            }
    return out;
}

}  // namespace

TEST_CASE("grsf reproduces the worked example") {
    Relation rel = grsf_sides(Index{1, 2}, 1);

    FormalSum lhs;
    lhs.add_term(Index{2, 1, 2}, 2);
    lhs.add_term(Index{2, 2, 1}, 1);
    CHECK(rel.lhs == lhs);

    FormalSum rhs;
    rhs.add_term(Index{2, 3}, 1);
    rhs.add_term(Index{3, 2}, 1);
    rhs.add_term(Index{2, 1, 2}, 1);
    CHECK(rel.rhs == rhs);
}

TEST_CASE("grsf degenerate cases") {
    for (int k1 = 1; k1 <= 4; ++k1) {
        Relation rel = grsf_sides(Index{k1}, 0);
        CHECK(rel.lhs == FormalSum::term(Index{k1 + 1}));
        CHECK(rel.rhs == FormalSum::term(Index{k1 + 1}));
    }
    Relation r11 = grsf_sides(Index{1, 1}, 0);
    CHECK(r11.lhs == FormalSum::term(Index{2, 1}));
    CHECK(r11.rhs == FormalSum::term(Index{2, 1}));
    CHECK_THROWS_AS(grsf_sides(Index{}, 1), EmptyIndex);
}

TEST_CASE("grsf weight homogeneity and lhs term count") {
    for (const Index& k : indices(5, 3, 4)) {
        for (int t = 0; t <= 2; ++t) {
            Relation rel = grsf_sides(k, t);
            for (const auto& [idx, c] : rel.lhs.terms()) CHECK(idx.weight() == k.weight() + t + 1);
            for (const auto& [idx, c] : rel.rhs.terms()) CHECK(idx.weight() == k.weight() + t + 1);

            // L.H.S. multiplicity: sum over compositions (m_i) of the product
            // of per-block composition counts.
            long long expected = 0;
            for (const auto& m : compositions(k.depth() + t, k.depth(), 1)) {
                long long prod = 1;
                for (int i = 0; i < k.depth(); ++i)
                    prod *= binom(k.parts()[static_cast<size_t>(i)] + m[static_cast<size_t>(i)] - 2,
                                  m[static_cast<size_t>(i)] - 1);
                expected += prod;
            }
            CHECK(rel.lhs.total_coefficient() == expected);

            Relation fin = grsf_finite_sides(k, t);
            for (const auto& [idx, c] : fin.lhs.terms()) CHECK(idx.weight() == k.weight() + t);
            for (const auto& [idx, c] : fin.rhs.terms()) CHECK(idx.weight() == k.weight() + t);
        }
    }
}

TEST_CASE("grsf-ones") {
    // s = 0 coincides with grsf
    for (const Index& k : indices(4, 2, 3)) {
        for (int t = 0; t <= 2; ++t) {
            Relation a = grsf_sides(k, t), b = grsf_ones_sides(k, 0, t);
            CHECK(a.lhs == b.lhs);
            CHECK(a.rhs == b.rhs);
        }
    }

    Relation r = grsf_ones_sides(Index{2}, 1, 0);
    CHECK(r.lhs == FormalSum::term(Index{3, 1}));
    CHECK(r.rhs == FormalSum::term(Index{3, 1}));

    // k=(1), s=1, t=1: single block a_2 with |a_2| = 2
    Relation r2 = grsf_ones_sides(Index{1}, 1, 1);
    CHECK(r2.lhs == FormalSum::term(Index{2, 1, 1}));
    FormalSum rhs2;  // sum over |e| = 1 of zeta+((1,1)+e)
    rhs2.add_term(Index{3, 1}, 1);
    rhs2.add_term(Index{2, 2}, 1);
    CHECK(r2.rhs == rhs2);
}

TEST_CASE("sum formula instances") {
    Relation r32 = sum_formula_sides(3, 2);
    CHECK(r32.lhs == FormalSum::term(Index{2, 1}));
    CHECK(r32.rhs == FormalSum::term(Index{3}));

    Relation r42 = sum_formula_sides(4, 2);
    FormalSum lhs42;
    lhs42.add_term(Index{3, 1}, 1);
    lhs42.add_term(Index{2, 2}, 1);
    CHECK(r42.lhs == lhs42);
    CHECK(r42.rhs == FormalSum::term(Index{4}));

    Relation r21 = sum_formula_sides(2, 1);
    CHECK(r21.lhs == FormalSum::term(Index{2}));
    CHECK(r21.rhs == FormalSum::term(Index{2}));

    CHECK_THROWS_AS(sum_formula_sides(2, 2), InvalidParams);

    // lhs enumerates every admissible index of weight k and depth u
    for (int k = 3; k <= 7; ++k)
        for (int u = 1; u < k; ++u) {
            Relation rel = sum_formula_sides(k, u);
            FormalSum expected;
            for (const auto& c : compositions(k, u, 1))
                if (c.front() >= 2) expected.add_term(Index(c), 1);
            CHECK(rel.lhs == expected);
        }
}

TEST_CASE("ohno sides") {
    // l = 0 reduces to the dual involution: lhs == rhs
    for (const Index& k : indices(5, 3, 4)) {
        Relation rel = ohno_sides(k, 0, Flavor::Real);
        CHECK(rel.lhs == rel.rhs);
    }

    Relation r = ohno_sides(Index{2}, 1, Flavor::Real);
    CHECK(r.lhs == FormalSum::term(Index{4}));
    FormalSum rhs;
    rhs.add_term(Index{2, 2}, 1);
    rhs.add_term(Index{3, 1}, 1);
    CHECK(r.rhs == rhs);

    // finite flavor leaves indices unshifted
    Relation fin = ohno_sides(Index{2}, 1, Flavor::Finite);
    CHECK(fin.lhs == FormalSum::term(Index{3}));
    for (const auto& [idx, c] : fin.lhs.terms()) CHECK(idx.weight() == 3);
}

TEST_CASE("grsf finite sides") {
    Relation rel = grsf_finite_sides(Index{1, 2}, 1);
    FormalSum lhs;
    lhs.add_term(Index{1, 1, 2}, 2);
    lhs.add_term(Index{1, 2, 1}, 1);
    CHECK(rel.lhs == lhs);
    FormalSum rhs;
    rhs.add_term(Index{1, 3}, 1);
    rhs.add_term(Index{2, 2}, 1);
    rhs.add_term(Index{1, 1, 2}, 1);
    CHECK(rel.rhs == rhs);

    Relation r1 = grsf_finite_sides(Index{1}, 1);
    CHECK(r1.lhs == FormalSum::term(Index{1, 1}));
    CHECK(r1.rhs == FormalSum::term(Index{2}));

    Relation r2 = grsf_finite_sides(Index{2}, 0);
    CHECK(r2.lhs == FormalSum::term(Index{2}));
    CHECK(r2.rhs == FormalSum::term(Index{2}));
}

TEST_CASE("k_u transform") {
    CHECK(k_sub_u(Index{2, 3}, 2) == FormalSum::term(Index{2, 1, 1, 3}));
    CHECK(k_sub_u(Index{2, 1, 3}, 1) == FormalSum::term(Index{2, 1, 1, 3}, 2));
    CHECK_THROWS_AS(k_sub_u(Index{3}, 1), DepthTooSmall);

    // (k_u)_{u'} == C(u+u', u) k_{u+u'}
    CHECK(k_sub_u(k_sub_u(Index{1, 2, 1}, 1), 1) == k_sub_u(Index{1, 2, 1}, 2).scaled(2));
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> depth_d(2, 5), part_d(1, 3), u_d(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> parts(static_cast<size_t>(depth_d(rng)));
        for (int& p : parts) p = part_d(rng);
        Index k(parts);
        int u = u_d(rng), v = u_d(rng);
        CHECK(k_sub_u(k_sub_u(k, u), v) == k_sub_u(k, u + v).scaled(binom(u + v, u)));
    }
}

TEST_CASE("f_sides and g_sides linearity") {
    auto [gl, gr] = g_sides(Index{2}, 1);
    CHECK(gl == FormalSum::term(Index{4}));
    FormalSum grhs;
    grhs.add_term(Index{2, 2}, 1);
    grhs.add_term(Index{3, 1}, 1);
    CHECK(gr == grhs);

    auto [fl1, fr1] = f_sides(Index{1, 2}, 1);
    auto [fl2, fr2] = f_sides(FormalSum::term(Index{1, 2}, 2), 1);
    CHECK(fl2 == fl1.scaled(2));
    CHECK(fr2 == fr1.scaled(2));

    // worked example again via f_sides
    FormalSum lhs;
    lhs.add_term(Index{2, 1, 2}, 2);
    lhs.add_term(Index{2, 2, 1}, 1);
    CHECK(fl1 == lhs);
}

TEST_CASE("lemma formal identities, small instances") {
    CHECK(lemma_first_check(Index{1, 2}, 0));
    CHECK(lemma_second_check(Index{1, 2}, 0));
    CHECK(lemma_first_check(Index{1, 2}, 1));
    CHECK(lemma_second_check(Index{1, 2}, 1));
    CHECK(lemma_first_check(Index{2, 1, 2}, 2));
    CHECK(lemma_second_check(Index{2, 1, 2}, 2));
    CHECK_THROWS_AS(lemma_first_check(Index{3}, 1), DepthTooSmall);
}

TEST_CASE("equivalence bootstrap recursion, small instances") {
    for (const Index& k : indices(3, 3, 3)) {
        for (int s = 0; s <= 1; ++s) {
            for (int t = 0; t <= 2; ++t) {
                Index k1 = concat(k, Index::ones(1));
                CHECK(grsf_ones_defect(k, s + 1, t) ==
                      grsf_ones_defect(k1, s, t) - grsf_ones_defect(k1, s + 1, t - 1));
            }
        }
    }
}
