#include <doctest.h>

#include <set>
#include <vector>

#include "polytuple/combinatorics.hpp"

using namespace polytuple;

TEST_CASE("binomial coefficients") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(14, 2) == 91);
    CHECK(binom(30, 2) == 435);
    CHECK(binom(100, 3) == 161700);
    CHECK(binom(1024, 2) == 523776);
    // Pascal identity spot checks.
    for (uint64_t n = 1; n <= 20; ++n) {
        for (uint64_t k = 1; k <= n; ++k) {
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
        }
    }
    CHECK(binom(200, 100) == binom_saturated);
}

TEST_CASE("combination enumeration, ranking, unranking agree") {
    for (uint32_t n : {1u, 4u, 7u}) {
        for (uint32_t t = 1; t <= n; ++t) {
            std::vector<uint32_t> combo = first_combination(t);
            uint64_t rank = 0;
            do {
                CHECK(combination_rank(n, combo) == rank);
                CHECK(combination_unrank(n, t, rank) == combo);
                ++rank;
            } while (next_combination(n, combo));
            CHECK(rank == binom(n, t));
        }
    }
}

TEST_CASE("pair_rank matches generic rank") {
    uint32_t n = 37;
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = a + 1; b < n; ++b) {
            CHECK(pair_rank(n, a, b) == combination_rank(n, {a, b}));
        }
    }
}

TEST_CASE("counter rng is reproducible and roughly uniform") {
    CounterRng a(42);
    CounterRng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    CounterRng c(42);
    CounterRng d(43);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= (c.next() != d.next());
    CHECK(differs);

    CounterRng r(7);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 5000; ++i) ++counts[r.below(5)];
    for (int k = 0; k < 5; ++k) {
        CHECK(counts[k] > 800);
        CHECK(counts[k] < 1200);
    }
    CounterRng s(9);
    for (int i = 0; i < 200; ++i) {
        int64_t v = s.in_range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
