#include <doctest.h>

#include <random>

#include "mzv/errors.hpp"
#include "mzv/formal_sum.hpp"

using namespace mzv;

namespace {

std::vector<Index> indices_up_to_weight(int max_w) {
    std::vector<Index> out;
    for (int w = 1; w <= max_w; ++w)
        for (int d = 1; d <= w; ++d)
            for (const auto& c : compositions(w, d, 1)) out.emplace_back(c);
    return out;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("formal sum arithmetic") {
    FormalSum a = FormalSum::term(Index{2});
    FormalSum b = FormalSum::term(Index{2}, -1);
    CHECK((a + b).zero());
    CHECK(FormalSum::term(Index{2, 1}).scaled(2) == FormalSum::term(Index{2, 1}, 2));

    FormalSum c = FormalSum::term(Index{3}) + FormalSum::term(Index{2, 1});
    CHECK(c.size() == 2);
    CHECK(c.str() == "(3) + (2,1)");
}

TEST_CASE("harmonic product base and small cases") {
    CHECK(harmonic(Index{}, Index{2, 1}) == FormalSum::term(Index{2, 1}));
    CHECK(harmonic(Index{2, 1}, Index{}) == FormalSum::term(Index{2, 1}));

    FormalSum one_one;
    one_one.add_term(Index{1, 1}, 2);
    one_one.add_term(Index{2}, 1);
    CHECK(harmonic(Index{1}, Index{1}) == one_one);

    FormalSum two_one;
    two_one.add_term(Index{2, 1}, 1);
    two_one.add_term(Index{1, 2}, 1);
    two_one.add_term(Index{3}, 1);
    CHECK(harmonic(Index{2}, Index{1}) == two_one);
}

TEST_CASE("harmonic product is commutative and associative") {
    auto small = indices_up_to_weight(5);
    for (const Index& k : small)
        for (const Index& l : small) CHECK(harmonic(k, l) == harmonic(l, k));

    std::mt19937 rng(23);
    std::uniform_int_distribution<size_t> pick(0, small.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const Index &k = small[pick(rng)], &l = small[pick(rng)], &m = small[pick(rng)];
        CHECK(harmonic(harmonic(k, l), FormalSum::term(m)) ==
              harmonic(FormalSum::term(k), harmonic(l, m)));
    }
}

TEST_CASE("circled harmonic product") {
    CHECK(circled_harmonic(Index{2}, Index{1}) == FormalSum::term(Index{3}));
    CHECK(circled_harmonic(Index{1}, Index{1, 1}) == FormalSum::term(Index{2, 1}));

    FormalSum expected;
    expected.add_term(Index{3, 1, 1}, 2);
    expected.add_term(Index{3, 2}, 1);
    CHECK(circled_harmonic(Index{2, 1}, Index{1, 1}) == expected);

    CHECK_THROWS_AS(circled_harmonic(Index{}, Index{1}), EmptyIndex);
    CHECK_THROWS_AS(circled_harmonic(Index{1}, Index{}), EmptyIndex);
}

TEST_CASE("star expansion") {
    FormalSum s12;
    s12.add_term(Index{1, 2}, 1);
    s12.add_term(Index{3}, 1);
    CHECK(star_expand(Index{1, 2}) == s12);

    FormalSum s11;
    s11.add_term(Index{1, 1}, 1);
    s11.add_term(Index{2}, 1);
    CHECK(star_expand(Index{1, 1}) == s11);

    // ({1}^{t+1})* is the formal sum of all indices of weight t+1
    FormalSum ones3 = star_expand(Index::ones(3));
    FormalSum all3;
    for (int d = 1; d <= 3; ++d)
        for (const auto& c : compositions(3, d, 1)) all3.add_term(Index(c), 1);
    CHECK(ones3 == all3);

    CHECK_THROWS_AS(star_expand(Index{}), EmptyIndex);

    // 2^{r-1} terms before merging, i.e. total coefficient
    for (const Index& k : indices_up_to_weight(6))
        CHECK(star_expand(k).total_coefficient() == (1LL << (k.depth() - 1)));
}

TEST_CASE("naive shuffle") {
    FormalSum expected;
    expected.add_term(Index{2, 3, 1}, 1);
    expected.add_term(Index{3, 2, 1}, 1);
    expected.add_term(Index{3, 1, 2}, 1);
    CHECK(naive_shuffle(Index{3, 1}, Index{2}) == expected);

    CHECK(naive_shuffle(Index{}, Index{5}) == FormalSum::term(Index{5}));
    CHECK(naive_shuffle(Index{1}, Index{1}) == FormalSum::term(Index{1, 1}, 2));

    // total multiplicity C(r+s, r)
    auto small = indices_up_to_weight(4);
    for (const Index& k : small)
        for (const Index& l : small)
            CHECK(naive_shuffle(k, l).total_coefficient() ==
                  binom(k.depth() + l.depth(), k.depth()));
}

TEST_CASE("termwise zeta_plus") {
    CHECK(zeta_plus_sum(FormalSum::term(Index{1, 1}, 2)) == FormalSum::term(Index{2, 1}, 2));
    FormalSum in = FormalSum::term(Index{1}) + FormalSum::term(Index{2});
    FormalSum out = FormalSum::term(Index{2}) + FormalSum::term(Index{3});
    CHECK(zeta_plus_sum(in) == out);
    CHECK(zeta_plus_sum(FormalSum{}).zero());
    // collision merging: (1,2) and (2,2)... (1,2)+ -> (2,2), (2,2) stays distinct input
    FormalSum collide = FormalSum::term(Index{1, 2}) + FormalSum::term(Index{2, 2});
    FormalSum merged;
    merged.add_term(Index{2, 2}, 1);
    merged.add_term(Index{3, 2}, 1);
    CHECK(zeta_plus_sum(collide) == merged);
}
