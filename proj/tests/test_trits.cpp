#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "cmbent/trits.hpp"

using namespace cmbent;

TEST_CASE("pow3i and reduce_mod") {
    CHECK(pow3i(0) == 1);
    CHECK(pow3i(13) == 1594323);
    CHECK(reduce_mod(0, 3) == 0);
    CHECK(reduce_mod(26, 3) == 0);
    CHECK(reduce_mod(27, 3) == 1);
    CHECK(reduce_mod(-1, 3) == 25);
    CHECK(reduce_mod(-27, 3) == 25);
}

TEST_CASE("to_trits documented examples") {
    CHECK(to_trits(5, 3).digits == std::vector<uint8_t>{2, 1, 0});
    CHECK(to_trits(-1, 3).digits == std::vector<uint8_t>{1, 2, 2});
    CHECK(to_trits(26, 3).digits == std::vector<uint8_t>{0, 0, 0});
    CHECK(to_trits(5, 3).value() == 5);
    CHECK(to_trits(26, 3).value() == 0);
}

TEST_CASE("to_trits round-trips every residue") {
    for (int n = 1; n <= 5; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t j = 0; j < m; ++j) {
            TritVector t = to_trits(j, n);
            CHECK(t.value() == j);
            int sum = std::accumulate(t.digits.begin(), t.digits.end(), 0);
            CHECK(t.weight() == sum);
        }
    }
}

TEST_CASE("the all-two vector never appears") {
    // 3^n - 1 has all digits two but reduces to the zero residue
    for (int n = 1; n <= 6; ++n) {
        TritVector t = to_trits(pow3i(n) - 1, n);
        CHECK(t.weight() == 0);
    }
}

TEST_CASE("wt documented values") {
    CHECK(wt(-1, 3) == 5);
    CHECK(wt(0, 3) == 0);
    CHECK(wt(5, 3) == 3);
    CHECK(wt(13, 3) == 3); // (3^3 - 1)/2 = 111_3
}

TEST_CASE("wt is invariant under multiplication by 3") {
    for (int n = 2; n <= 6; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t j = 0; j < m; j += 7) CHECK(wt(j, n) == wt((j * 3) % m, n));
    }
}

TEST_CASE("sigma documented values") {
    CHECK(sigma(0, 3) == 1);
    CHECK(sigma(4, 3) == 1);  // digits 1,1,0
    CHECK(sigma(8, 3) == 4);  // digits 2,2,0
    CHECK(sigma(8, 2) == 1);  // 8 = 0 mod 8
    CHECK(sigma(-1, 3) == 4); // digits 1,2,2
    CHECK(sigma(13, 3) == 1); // digits 1,1,1
}

TEST_CASE("sigma is a power of two bounded by 2^n") {
    for (int n = 1; n <= 5; ++n) {
        for (int64_t j = 0; j < pow3i(n) - 1; ++j) {
            int64_t s = sigma(j, n);
            CHECK((s & (s - 1)) == 0);
            CHECK(s >= 1);
            CHECK(s <= (int64_t{1} << n));
        }
    }
}

TEST_CASE("add_with_carry documented examples") {
    auto [z1, c1] = add_with_carry(to_trits(13, 3), to_trits(13, 3));
    CHECK(z1.value() == 0);
    CHECK(c1.bits == std::vector<uint8_t>{1, 1, 1});
    auto [z2, c2] = add_with_carry(to_trits(1, 3), to_trits(2, 3));
    CHECK(z2.value() == 3);
    CHECK(c2.bits == std::vector<uint8_t>{1, 0, 0});
    CHECK(c2.weight() == 1);
}

TEST_CASE("carry identity, exhaustive small fields") {
    for (int n = 1; n <= 4; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t x = 0; x < m; ++x) {
            for (int64_t y = 0; y < m; ++y) {
                TritVector tx = to_trits(x, n), ty = to_trits(y, n);
                auto [z, c] = add_with_carry(tx, ty);
                CHECK(z.value() == (x + y) % m);
                CHECK(tx.weight() + ty.weight() == z.weight() + 2 * c.weight());
            }
        }
    }
}

TEST_CASE("carry identity, random larger fields") {
    std::mt19937_64 rng(20260825);
    for (int n = 5; n <= 8; ++n) {
        int64_t m = pow3i(n) - 1;
        std::uniform_int_distribution<int64_t> dist(0, m - 1);
        for (int rep = 0; rep < 2000; ++rep) {
            int64_t x = dist(rng), y = dist(rng);
            TritVector tx = to_trits(x, n), ty = to_trits(y, n);
            auto [z, c] = add_with_carry(tx, ty);
            CHECK(z.value() == (x + y) % m);
            CHECK(tx.weight() + ty.weight() == z.weight() + 2 * c.weight());
        }
    }
}

TEST_CASE("eq_weight_condition documented examples") {
    CHECK(eq_weight_condition(1, 3, 3) == WeightRelation::equal);
    CHECK(eq_weight_condition(2, 2, 2) == WeightRelation::plus2);
    CHECK(eq_weight_condition(13, 13, 3) == WeightRelation::other);
}

TEST_CASE("digit criteria agree with carry classification") {
    for (int n = 2; n <= 4; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t x = 0; x < m; ++x)
            for (int64_t y = 0; y < m; ++y)
                CHECK(eq_weight_condition(x, y, n) == eq_weight_condition_digits(x, y, n));
    }
    std::mt19937_64 rng(7);
    for (int n = 5; n <= 8; ++n) {
        std::uniform_int_distribution<int64_t> dist(0, pow3i(n) - 2);
        for (int rep = 0; rep < 2000; ++rep) {
            int64_t x = dist(rng), y = dist(rng);
            CHECK(eq_weight_condition(x, y, n) == eq_weight_condition_digits(x, y, n));
        }
    }
}

TEST_CASE("eq_weight_condition n=1 skips the degenerate cross-check") {
    CHECK_NOTHROW(eq_weight_condition(0, 0, 1));
    CHECK_NOTHROW(eq_weight_condition(1, 1, 1));
}

TEST_CASE("doubling_cases documented examples") {
    try {
        doubling_cases(13, 3);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::half_point);
    }
    try {
        doubling_cases(0, 3);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::zero_input);
    }
    CHECK(doubling_cases(17, 3).eq);       // digits 2,2,1 all nonzero
    CHECK_FALSE(doubling_cases(9, 3).eq);  // digits 0,0,1
    CHECK_FALSE(doubling_cases(9, 3).plus2);
}

TEST_CASE("doubling_cases matches direct weight arithmetic everywhere") {
    for (int n = 2; n <= 6; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t j = 1; j < m; ++j) {
            if (j == m / 2) continue;
            DoublingCases dc = doubling_cases(j, n);
            int lhs = 2 * wt(-j, n), rhs = wt(-2 * j, n);
            CHECK(dc.eq == (lhs == rhs));
            CHECK(dc.plus2 == (lhs == rhs + 2));
            CHECK_FALSE((dc.eq && dc.plus2));
        }
    }
}

TEST_CASE("halving_patterns documented examples") {
    CHECK(halving_patterns(to_trits(28, 4)).value() == 14);
    CHECK(halving_patterns(to_trits(4, 4)).value() == 2);
    CHECK(halving_patterns(to_trits(0, 4)).value() == 0);
    try {
        halving_patterns(to_trits(3, 4));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::odd_input);
    }
}

TEST_CASE("halving inverts doubling on even residues") {
    for (int n = 2; n <= 5; ++n) {
        int64_t m = pow3i(n) - 1;
        for (int64_t h = 0; h < m; h += 2) CHECK(halving_patterns(to_trits(h, n)).value() == h / 2);
    }
}

TEST_CASE("weight_floor_scan documented examples") {
    WeightFloor a = weight_floor_scan(3, 1);
    CHECK(a.min == 3);
    CHECK(a.argmin == std::vector<int64_t>{13});
    WeightFloor b = weight_floor_scan(4, 3);
    CHECK(b.min == 4);
    CHECK(b.argmin == std::vector<int64_t>{40});
    WeightFloor c = weight_floor_scan(7, 5);
    CHECK(c.min == 7);
    CHECK(c.argmin == std::vector<int64_t>{1093});
}

TEST_CASE("weight floor is n at the half point for every small case") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 11; k += 2) {
            if (std::gcd(n, k) != 1) continue;
            WeightFloor wf = weight_floor_scan(n, k);
            CHECK(wf.min == n);
            CHECK(wf.argmin == std::vector<int64_t>{(pow3i(n) - 1) / 2});
        }
    }
}

TEST_CASE("check_cm_parameters rejects the documented boundary") {
    CHECK_NOTHROW(check_cm_parameters(1, 1));
    CHECK_NOTHROW(check_cm_parameters(13, 5));
    auto expect_bad = [](int n, int k) {
        try {
            check_cm_parameters(n, k);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::bad_parameters);
        }
    };
    expect_bad(0, 1);
    expect_bad(14, 1);
    expect_bad(3, 2); // even k
    expect_bad(6, 3); // shared factor
    expect_bad(3, 0);
    expect_bad(3, 41); // beyond the supported exact range
    expect_bad(3, -1);
}

TEST_CASE("cm exponent values") {
    CHECK(cm_exponent_exact(1) == 2);
    CHECK(cm_exponent_exact(3) == 14);
    CHECK(cm_exponent_exact(5) == 122);
    CHECK(cm_exponent_exact(7) == 1094);
    CHECK(cm_exponent_exact(39) == 2026277576509488134);
    CHECK(cm_exponent_mod(7, 5) == 122);
    CHECK(cm_exponent_mod(3, 5) == 122 % 26);
    CHECK(cm_exponent_mod(10, 7) == 1094);
    CHECK(cm_exponent_mod(4, 3) == 14);
}
