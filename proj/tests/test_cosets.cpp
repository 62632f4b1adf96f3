#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cmbent/cosets.hpp"
#include "cmbent/trits.hpp"

using namespace cmbent;

TEST_CASE("cosets mod 26 match the documented partition") {
    std::vector<Coset> cs = cosets_mod(3);
    std::vector<int64_t> leaders;
    for (const Coset& c : cs) leaders.push_back(c.leader);
    CHECK(leaders == std::vector<int64_t>{0, 1, 2, 4, 5, 7, 8, 13, 14, 17});
    CHECK(cs[1].members == std::vector<int64_t>{1, 3, 9});
    CHECK(cs[7].members == std::vector<int64_t>{13});
    CHECK(cs[7].size() == 1);
}

TEST_CASE("cosets mod 8 and mod 2") {
    std::vector<Coset> cs2 = cosets_mod(2);
    std::vector<int64_t> leaders;
    for (const Coset& c : cs2) leaders.push_back(c.leader);
    CHECK(leaders == std::vector<int64_t>{0, 1, 2, 4, 5});
    CHECK(cs2[1].members == std::vector<int64_t>{1, 3});

    std::vector<Coset> cs1 = cosets_mod(1);
    CHECK(cs1.size() == 2);
    CHECK(cs1[0].members == std::vector<int64_t>{0});
    CHECK(cs1[1].members == std::vector<int64_t>{1});
}

TEST_CASE("cosets partition the residues") {
    for (int n = 1; n <= 7; ++n) {
        int64_t m = pow3i(n) - 1;
        std::vector<bool> seen(m, false);
        int64_t covered = 0;
        for (const Coset& c : cosets_mod(n)) {
            CHECK(c.leader == *std::min_element(c.members.begin(), c.members.end()));
            CHECK(c.members.front() == c.leader);
            CHECK(n % c.size() == 0); // orbit length divides n
            for (size_t i = 0; i < c.members.size(); ++i) {
                int64_t cur = c.members[i];
                CHECK_FALSE(seen[cur]);
                seen[cur] = true;
                ++covered;
                // successive members differ by a factor of 3
                int64_t nxt = c.members[(i + 1) % c.members.size()];
                CHECK(cur * 3 % m == nxt);
            }
        }
        CHECK(covered == m);
    }
}

TEST_CASE("coset_of and coset_size agree with the partition") {
    for (int n = 1; n <= 6; ++n) {
        for (const Coset& c : cosets_mod(n)) {
            for (int64_t j : c.members) {
                Coset via = coset_of(j, n);
                CHECK(via.leader == c.leader);
                CHECK(via.members == c.members);
                CHECK(coset_size(j, n) == c.size());
            }
        }
        // negative and overflowing inputs reduce first
        CHECK(coset_of(-1, n).leader == coset_of(pow3i(n) - 2, n).leader);
    }
    CHECK(coset_of(3, 3).leader == 1);
    CHECK(coset_size(9, 3) == 3);
    CHECK(coset_size(13, 3) == 1);
}

TEST_CASE("single trace term reproduces the field trace") {
    FieldCtx ctx = FieldCtx::builtin(3);
    TracePolynomial p;
    p.terms.push_back({ctx.one(), 1, std::nullopt, std::nullopt});
    for (int64_t i = 0; i < ctx.q(); ++i) {
        FieldElement x = ctx.element(i);
        CHECK(eval_trace_poly(ctx, p, x) == ctx.trace(x));
    }
    std::vector<uint8_t> tab = eval_trace_poly_table(ctx, p);
    for (int64_t i = 0; i < ctx.q(); ++i) CHECK(tab[i] == ctx.trace(ctx.element(i)));
    CHECK(pointwise_equal(ctx, p, tab));
}

TEST_CASE("table evaluation matches pointwise evaluation") {
    FieldCtx ctx = FieldCtx::builtin(4);
    TracePolynomial p;
    p.terms.push_back({ctx.generator(), 7, std::nullopt, std::nullopt});
    p.terms.push_back({ctx.pow(ctx.generator(), 5), 2, std::nullopt, std::nullopt});
    p.constant = 2;
    std::vector<uint8_t> tab = eval_trace_poly_table(ctx, p);
    for (int64_t i = 0; i < ctx.q(); ++i)
        CHECK(tab[i] == eval_trace_poly(ctx, p, ctx.element(i)));
    CHECK(pointwise_equal(ctx, p, tab));
    tab[5] = static_cast<uint8_t>((tab[5] + 1) % 3);
    CHECK_FALSE(pointwise_equal(ctx, p, tab));
}

TEST_CASE("the constant acts as the coefficient of x^(q-1)") {
    FieldCtx ctx = FieldCtx::builtin(2);
    TracePolynomial p;
    p.constant = 2;
    CHECK(eval_trace_poly(ctx, p, ctx.zero()) == 0);
    for (int64_t i = 1; i < ctx.q(); ++i) CHECK(eval_trace_poly(ctx, p, ctx.element(i)) == 2);
}

TEST_CASE("coeff_power is metadata only") {
    FieldCtx ctx = FieldCtx::builtin(3);
    TracePolynomial bare, tagged;
    bare.terms.push_back({ctx.generator(), 4, std::nullopt, std::nullopt});
    tagged.terms.push_back({ctx.generator(), 4, 1, std::nullopt});
    CHECK(eval_trace_poly_table(ctx, bare) == eval_trace_poly_table(ctx, tagged));
}

TEST_CASE("pointwise_equal rejects a short table") {
    FieldCtx ctx = FieldCtx::builtin(2);
    TracePolynomial p;
    std::vector<uint8_t> shorter(ctx.q() - 1, 0);
    try {
        pointwise_equal(ctx, p, shorter);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::size_mismatch);
    }
}

TEST_CASE("short-orbit exponents trace from their own subfield by default") {
    FieldCtx ctx = FieldCtx::builtin(4);
    // 10 * 3 = 30, 30 * 3 = 10 mod 80: orbit size 2, so x^10 lies in F_9
    REQUIRE(coset_size(10, 4) == 2);
    TracePolynomial p;
    p.terms.push_back({ctx.one(), 10, std::nullopt, std::nullopt});
    for (int64_t i = 0; i < ctx.q(); ++i) {
        FieldElement x10 = ctx.pow(ctx.element(i), 10);
        CHECK(eval_trace_poly(ctx, p, ctx.element(i)) == ctx.subfield_trace(x10, 2).trit(0));
    }
}

TEST_CASE("trace_degree pins the absolute trace for short-orbit exponents") {
    FieldCtx ctx = FieldCtx::builtin(4);
    TracePolynomial p;
    p.terms.push_back({ctx.one(), 10, std::nullopt, 4});
    std::vector<uint8_t> tab = eval_trace_poly_table(ctx, p);
    for (int64_t i = 0; i < ctx.q(); ++i) {
        FieldElement x10 = ctx.pow(ctx.element(i), 10);
        CHECK(tab[i] == ctx.trace(x10));
        // over a quadratic step the absolute trace doubles the subfield one
        CHECK(tab[i] == 2 * ctx.subfield_trace(x10, 2).trit(0) % 3);
    }
}

TEST_CASE("coefficients outside the subfield are rejected") {
    FieldCtx ctx = FieldCtx::builtin(4);
    FieldElement g3 = ctx.pow(ctx.generator(), 3); // g^3 is not fixed by x -> x^9
    TracePolynomial p;
    p.terms.push_back({g3, 10, std::nullopt, std::nullopt});
    try {
        eval_trace_poly(ctx, p, ctx.one());
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::malformed_term);
    }
    // pinning the absolute trace lifts the restriction
    p.terms[0].trace_degree = 4;
    CHECK_NOTHROW(eval_trace_poly(ctx, p, ctx.one()));
    // a coefficient inside F_9 is fine without pinning
    p.terms[0] = {ctx.pow(ctx.generator(), 10), 10, std::nullopt, std::nullopt};
    CHECK_NOTHROW(eval_trace_poly(ctx, p, ctx.one()));
}

TEST_CASE("invalid trace degrees are rejected") {
    FieldCtx ctx = FieldCtx::builtin(4);
    TracePolynomial p;
    auto expect_bad = [&](TraceTerm t) {
        p.terms = {t};
        try {
            eval_trace_poly(ctx, p, ctx.one());
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::malformed_term);
        }
        CHECK_THROWS_AS(eval_trace_poly_table(ctx, p), error);
    };
    expect_bad({ctx.one(), -2, std::nullopt, std::nullopt});  // negative exponent
    expect_bad({ctx.one(), 1, std::nullopt, 3});              // 3 does not divide 4
    expect_bad({ctx.one(), 1, std::nullopt, 0});
    expect_bad({ctx.one(), 1, std::nullopt, 2});              // full-orbit x escapes F_9
}
