#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmbent/eisenstein.hpp"

using namespace cmbent;

TEST_CASE("omega satisfies its minimal polynomial") {
    Eisenstein w = Eisenstein::omega();
    CHECK(w * w == Eisenstein(-1, -1));
    CHECK(w * w * w == Eisenstein(1, 0));
    CHECK(w * w + w + Eisenstein(1, 0) == Eisenstein(0, 0));
}

TEST_CASE("omega_power reduces any integer exponent") {
    CHECK(Eisenstein::omega_power(0) == Eisenstein(1, 0));
    CHECK(Eisenstein::omega_power(1) == Eisenstein(0, 1));
    CHECK(Eisenstein::omega_power(2) == Eisenstein(-1, -1));
    CHECK(Eisenstein::omega_power(3) == Eisenstein(1, 0));
    CHECK(Eisenstein::omega_power(-1) == Eisenstein(-1, -1));
    CHECK(Eisenstein::omega_power(-2) == Eisenstein(0, 1));
    CHECK(Eisenstein::omega_power(301) == Eisenstein(0, 1));
}

TEST_CASE("ring operations") {
    Eisenstein x(3, -2), y(-1, 5);
    CHECK(x + y == Eisenstein(2, 3));
    CHECK(x - y == Eisenstein(4, -7));
    CHECK(-x == Eisenstein(-3, 2));
    // (3 - 2w)(-1 + 5w) = -3 + 15w + 2w - 10w^2 = -3 + 17w + 10 + 10w
    CHECK(x * y == Eisenstein(7, 27));
    CHECK(x * y == y * x);
    CHECK((x + y) * x == x * x + y * x);
    CHECK(x != y);
    CHECK(Eisenstein(0, 0).is_zero());
    CHECK_FALSE(x.is_zero());
}

TEST_CASE("conjugation fixes rationals and flips omega") {
    CHECK(Eisenstein(5, 0).conj() == Eisenstein(5, 0));
    CHECK(Eisenstein::omega().conj() == Eisenstein(-1, -1));
    Eisenstein x(3, -2), y(-1, 5);
    CHECK((x * y).conj() == x.conj() * y.conj());
    // x * conj(x) is the rational integer norm(x)
    CHECK(x * x.conj() == Eisenstein(x.norm(), 0));
}

TEST_CASE("norm is multiplicative and positive definite") {
    Eisenstein x(3, -2), y(-1, 5);
    CHECK(x.norm() == 19);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(Eisenstein(0, 0).norm() == 0);
    CHECK(Eisenstein::pi().norm() == 3);
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            if (a != 0 || b != 0) CHECK(Eisenstein(a, b).norm() > 0);
}

TEST_CASE("pi squared is an associate of 3") {
    // (w - 1)^2 = w^2 - 2w + 1 = -3w, so 3 = -pi^2 * w^2
    Eisenstein p = Eisenstein::pi();
    CHECK(p * p == Eisenstein(0, -3));
    CHECK(-(p * p) * Eisenstein::omega_power(2) == Eisenstein(3, 0));
}

TEST_CASE("pow3 exact values") {
    CHECK(pow3(0) == 1);
    CHECK(pow3(1) == 3);
    CHECK(pow3(13) == 1594323);
    CHECK(pow3(40) == mpz_class("12157665459056928801"));
}

TEST_CASE("render_unit documented examples") {
    // i * 3^(1/2) = 1 + 2w
    CHECK(render_unit(1, {1, 0}) == Eisenstein(1, 2));
    // i^0 * w * 3 = 3w
    CHECK(render_unit(2, {0, 1}) == Eisenstein(0, 3));
    // i^0 * 3^(1/2) is irrational
    CHECK_THROWS_AS(render_unit(1, {0, 0}), error);
    try {
        render_unit(1, {0, 0});
    } catch (const error& e) {
        CHECK(e.code() == errc::not_representable);
        CHECK(std::string(e.what()).find("NotRepresentable") == 0);
    }
    CHECK_THROWS_AS(render_unit(2, {1, 0}), error);
}

TEST_CASE("classify_unit documented examples") {
    CHECK(classify_unit(1, Eisenstein(1, 2)) == UnitClass{1, 0});
    CHECK(classify_unit(2, Eisenstein(-3, 0)) == UnitClass{2, 0});
    try {
        classify_unit(2, Eisenstein(1, 1));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::norm_mismatch);
    }
}

TEST_CASE("render_unit and classify_unit invert each other") {
    for (int n = 1; n <= 8; ++n) {
        for (int quarter = n % 2; quarter < 4; quarter += 2) {
            for (int g = 0; g < 3; ++g) {
                Eisenstein x = render_unit(n, {quarter, g});
                CHECK(x.norm() == pow3(n));
                CHECK(classify_unit(n, x) == UnitClass{quarter, g});
            }
        }
    }
}

TEST_CASE("the 12 unit classes per parity are distinct") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Eisenstein> seen;
        for (int quarter = n % 2; quarter < 4; quarter += 2)
            for (int g = 0; g < 3; ++g) seen.push_back(render_unit(n, {quarter, g}));
        for (size_t i = 0; i < seen.size(); ++i)
            for (size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
    }
}

TEST_CASE("render_unit multiplicativity in the omega exponent") {
    for (int n = 1; n <= 6; ++n) {
        int quarter = n % 2;
        Eisenstein base = render_unit(n, {quarter, 0});
        for (int g = 0; g < 3; ++g)
            CHECK(render_unit(n, {quarter, g}) == base * Eisenstein::omega_power(g));
    }
}

TEST_CASE("str renders a readable form") {
    CHECK(Eisenstein(1, 2).str() == "1+2w");
    CHECK(Eisenstein(0, 0).str() == "0+0w");
    CHECK(Eisenstein(-3, 0).str() == "-3+0w");
    CHECK(Eisenstein(0, -1).str() == "0-1w");
}
