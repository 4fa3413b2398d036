#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrlab/prime_context.hpp"
#include "oracle.hpp"

using namespace qrlab;

TEST_CASE("make_context on known primes") {
    auto c3 = make_context(3);
    CHECK(c3.p == 11);
    CHECK(c3.M == 0);
    CHECK(c3.M0 == 0);

    auto c5 = make_context(5);
    CHECK(c5.p == 19);
    CHECK(c5.M == 1);
    CHECK(c5.M0 == 0);

    auto c8 = make_context(8);
    CHECK(c8.p == 31);
    CHECK(c8.M == 2);
    CHECK(c8.M0 == 1);
}

TEST_CASE("make_context rejections") {
    CHECK_THROWS_WITH_AS(make_context(4), doctest::Contains("15"), std::invalid_argument);
    CHECK_THROWS_AS(make_context(0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(-2), std::invalid_argument);
    CHECK_THROWS_AS(make_context((i64{1} << 30) + 1), std::invalid_argument);
}

TEST_CASE("context invariants over a range") {
    for (i64 n = 1; n <= 500; ++n) {
        if (!is_prime(u64(4 * n - 1))) continue;
        auto c = make_context(n);
        CHECK(c.p == 4 * n - 1);
        CHECK(c.M0 >= 0);
        CHECK(c.M0 <= c.M);
    }
}

TEST_CASE("radical floor examples") {
    auto c5 = make_context(5);
    auto rf5 = radical_floors(c5);
    REQUIRE(rf5.floor_q.size() == 1);
    CHECK(rf5.floor_q[0] == 4);           // floor((1+sqrt(53))/2)
    REQUIRE(rf5.floor_r.size() == 1);
    CHECK(rf5.floor_r[0] == 4);           // isqrt(19)
    REQUIRE(rf5.k_jump.size() == 1);
    CHECK(rf5.k_jump[0] == 5);
    CHECK(rf5.ell[0] == 5);

    auto c3 = make_context(3);
    auto rf3 = radical_floors(c3);
    CHECK(rf3.floor_q.empty());           // M = 0
    CHECK(rf3.floor_r.empty());
    REQUIRE(rf3.k_jump.size() == 1);      // M0 = 0 still indexes m = 0
    CHECK(rf3.k_jump[0] == 4);            // 1 + floor((1+sqrt(29))/2)
    CHECK(rf3.ell[0] == 4);

    auto rf8 = radical_floors(make_context(8));
    CHECK(rf8.floor_q == std::vector<i64>{5, 7});
    CHECK(rf8.floor_r == std::vector<i64>{5, 7});
    CHECK(rf8.k_jump == std::vector<i64>{6, 8});
    CHECK(rf8.ell == std::vector<i64>{6, 8});
}

TEST_CASE("floor_q bracketing and non-integrality across scanned contexts") {
    for (i64 n = 2; n <= 300; ++n) {
        if (!is_prime(u64(4 * n - 1))) continue;
        auto c = make_context(n);
        for (i64 m = 0; m <= c.M; ++m) {
            const i64 t = floor_q_at(c, m);
            const i128 mp = i128(m) * c.p;
            CHECK(i128(t) * t - t + 2 - 3 * n <= mp);
            CHECK(i128(t + 1) * (t + 1) - (t + 1) + 2 - 3 * n > mp);
            CHECK(t == oracle::floor_q_linear(oracle::make(n), m));
        }
        // k^2 - k + 2 - 3n never equals mp (strict floor everywhere)
        for (i64 m = 0; m <= c.M; ++m)
            for (i64 k = 1; k <= n + 2; ++k)
                CHECK(i128(k) * k - k + 2 - 3 * n != i128(m) * c.p);
    }
}

TEST_CASE("k_jump and ell are nondecreasing and bounded by n+2") {
    for (i64 n = 4; n <= 400; ++n) {
        if (!is_prime(u64(4 * n - 1))) continue;
        auto rf = radical_floors(make_context(n));
        for (size_t i = 0; i < rf.k_jump.size(); ++i) {
            CHECK(rf.k_jump[i] <= rf.ell[i]);
            CHECK(rf.ell[i] <= n + 2);
            if (i) {
                CHECK(rf.k_jump[i - 1] <= rf.k_jump[i]);
                CHECK(rf.ell[i - 1] <= rf.ell[i]);
            }
        }
    }
}

TEST_CASE("radical_floor_sums matches the materialized tables") {
    for (i64 n : {3, 5, 8, 41, 100, 137}) {
        if (!is_prime(u64(4 * n - 1))) continue;
        auto c = make_context(n);
        auto rf = radical_floors(c);
        i128 r = 0, q = 0;
        for (i64 v : rf.floor_r) r += v;
        for (i64 v : rf.floor_q) q += v;
        auto s = radical_floor_sums(c);
        CHECK(s.sum_r == r);
        CHECK(s.sum_q == q);
    }
}
