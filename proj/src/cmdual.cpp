#include "cmbent/cmdual.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cmbent/trits.hpp"

namespace cmbent {

CmParams make_cm_params(const FieldCtx& ctx, FieldElement a, int k) {
    check_cm_parameters(ctx.n(), k);
    if (a.is_zero()) fail(errc::bad_parameters, "coefficient a must be nonzero");
    CmParams p;
    p.n = ctx.n();
    p.k = k;
    p.d = cm_exponent_exact(k);
    p.d_mod = cm_exponent_mod(p.n, k);
    p.a = a;
    if (std::gcd(p.d, pow3i(p.n) - 1) != 2)
        fail(errc::lemma_violation, "gcd(d, 3^n - 1) = 2 failed for n = " + std::to_string(p.n) +
                                        ", k = " + std::to_string(k));
    return p;
}

ExponentSet enumerate_s(int n, int k) {
    check_cm_parameters(n, k);
    const int64_t m = pow3i(n) - 1;
    const int64_t d = cm_exponent_mod(n, k);
    ExponentSet s;
    s.n = n;
    s.k = k;
    for (int64_t j = 1; j < m; ++j) {
        int64_t mjd = (m - (j * d) % m) % m;
        if (wt(j, n) + wt(mjd, n) == n + 1) s.members.push_back(j);
    }
    int64_t covered = 0;
    for (int64_t j : s.members) {
        Coset c = coset_of(j, n);
        if (c.leader != j) continue;
        SigmaPair sp{sigma(j, n), sigma(-(j * d), n)};
        for (int64_t mem : c.members) {
            if (!std::binary_search(s.members.begin(), s.members.end(), mem))
                fail(errc::lemma_violation,
                     "exponent set not closed under digit rotation at j = " + std::to_string(mem));
            if (sigma(mem, n) != sp.sigma_j || sigma(-(mem * d), n) != sp.sigma_mjd)
                fail(errc::lemma_violation,
                     "digit-factorial product varies inside coset of " + std::to_string(j));
        }
        covered += c.size();
        s.coset_leaders.push_back(j);
        s.per_coset.emplace(j, sp);
    }
    if (covered != static_cast<int64_t>(s.members.size()))
        fail(errc::lemma_violation, "exponent set contains a coset whose leader is missing");
    return s;
}

CaseUVW case_uvw(int n, int k, bool allow_small_t) {
    check_cm_parameters(n, k);
    const int t = (k - 1) / 2;
    const int min_t = allow_small_t ? 1 : 2;
    CaseUVW c;
    c.t = t;
    if (t >= min_t && n == 3 * t + 1) {
        c.case_tag = CaseTag::case_3t1;
    } else if (t >= min_t && n == 3 * t + 2) {
        c.case_tag = CaseTag::case_3t2;
    } else {
        fail(errc::not_covered, "no closed form for n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));
    }
    const int64_t half = (pow3i(n) - 1) / 2;
    if (c.case_tag == CaseTag::case_3t1) {
        c.u = half - pow3i(3 * t) - pow3i(2 * t) - pow3i(t);
        c.v = half - pow3i(3 * t) - pow3i(2 * t) + pow3i(t - 1);
        c.w = half - pow3i(3 * t) - pow3i(2 * t - 1) + pow3i(t - 1);
    } else {
        c.u = half - pow3i(3 * t + 1) - pow3i(2 * t + 1) - pow3i(t);
        c.v = c.u + 2 * pow3i(t);
        c.w = half - pow3i(3 * t + 1) - pow3i(2 * t) + pow3i(t - 1);
    }
    const int64_t d = cm_exponent_mod(n, k);
    auto sj = [&](int64_t j) { return sigma(j, n); };
    auto smjd = [&](int64_t j) { return sigma(-(j * d), n); };
    bool ok = sj(c.u) == 1 && sj(c.v) == 2 && sj(c.w) == 2 && smjd(c.u) == 2;
    if (c.case_tag == CaseTag::case_3t1)
        ok = ok && smjd(c.v) == 1 && smjd(c.w) == 2;
    else
        ok = ok && smjd(c.v) == 2 && smjd(c.w) == 1;
    if (!ok)
        fail(errc::lemma_violation, "u, v, w digit-factorial values off the proven pattern");
    return c;
}

int universal_dual(const FieldCtx& ctx, const CmParams& params, const ExponentSet& s,
                   FieldElement lambda) {
    if (ctx.n() != params.n || s.n != params.n || s.k != params.k)
        fail(errc::bad_parameters, "context, parameters and exponent set disagree");
    if (lambda.is_zero()) return 0; // every term carries base 0 to a positive power
    FieldElement base = ctx.mul(params.a, ctx.pow(ctx.inverse(lambda), params.d_mod));
    FieldElement acc = ctx.zero();
    for (const auto& [leader, sp] : s.per_coset) {
        const bool negate = (sp.sigma_j * sp.sigma_mjd) % 3 == 2;
        FieldElement y = ctx.pow(base, leader);
        const int msize = coset_size(leader, s.n);
        for (int i = 0; i < msize; ++i) {
            acc = ctx.add(acc, negate ? ctx.neg(y) : y);
            y = ctx.mul(ctx.mul(y, y), y);
        }
    }
    if (ctx.eta(params.a) < 0) acc = ctx.neg(acc);
    for (int i = 1; i < ctx.n(); ++i)
        if (acc.trit(i) != 0) fail(errc::not_in_prime_field, "dual sum escaped the prime field");
    return acc.trit(0);
}

std::vector<ClosedFormTerm> closed_form_terms(int n, int k, bool allow_small_t) {
    CaseUVW c = case_uvw(n, k, allow_small_t);
    const int t = c.t;
    int64_t e1, e2, denom1, denom2, denom3;
    if (c.case_tag == CaseTag::case_3t1) {
        e1 = pow3i(2 * t + 1) + pow3i(t + 1) + 2;
        e2 = pow3i(2 * t) + 1;
        denom1 = pow3i(2 * t + 1) + pow3i(t + 1) + 1;
        denom2 = -pow3i(2 * t) + pow3i(t) + 1;
        denom3 = -pow3i(2 * t + 1) + pow3i(t + 1) + 1;
    } else {
        e1 = pow3i(2 * t + 2) + 1;
        e2 = 2 * pow3i(2 * t + 1) + pow3i(t + 1) + 1;
        denom1 = pow3i(2 * t + 2) - pow3i(t + 1) + 3;
        denom2 = pow3i(2 * t + 2) + pow3i(t + 1) + 1;
        denom3 = -pow3i(2 * t + 2) + pow3i(t + 1) + 3;
    }
    // a sits in the denominator, so its printed power is the negated residue
    auto apow = [&](int64_t denom) { return reduce_mod(-denom, n); };
    return {{-1, apow(denom1), e1}, {-1, apow(denom2), e2}, {+1, apow(denom3), 2}};
}

TracePolynomial closed_form_dual(const FieldCtx& ctx, const CmParams& params, bool allow_small_t,
                                 std::optional<int64_t> a_log) {
    if (ctx.n() != params.n) fail(errc::bad_parameters, "context degree differs from parameters");
    auto terms = closed_form_terms(params.n, params.k, allow_small_t);
    const int64_t order = ctx.order();
    if (a_log && !(ctx.pow(ctx.generator(), *a_log) == params.a))
        fail(errc::bad_parameters, "a_log is not the generator exponent of a");
    TracePolynomial p;
    for (const ClosedFormTerm& term : terms) {
        TraceTerm tt;
        tt.coeff = ctx.pow(params.a, term.a_power);
        if (term.sign < 0) tt.coeff = ctx.neg(tt.coeff);
        tt.exponent = term.lambda_exponent;
        // the formula reads every term under the absolute trace; at t = 1
        // an exponent can have a short orbit, where the two notions differ
        tt.trace_degree = ctx.n();
        if (a_log) {
            int64_t cp = (term.a_power % order) * (((*a_log % order) + order) % order) % order;
            if (term.sign < 0) cp = (cp + order / 2) % order; // -1 = g^((q-1)/2)
            tt.coeff_power = cp;
        }
        p.terms.push_back(tt);
    }
    return p;
}

Regularity regularity(const FieldCtx& ctx, const CmParams& params) {
    if (ctx.n() != params.n) fail(errc::bad_parameters, "context degree differs from parameters");
    // (-1)^(n+1) * eta(a) * i^n as a power of i: each -1 contributes i^2.
    const int e = ctx.eta(params.a);
    const int quarter = (3 * params.n + 2 + (e < 0 ? 2 : 0)) % 4;
    return {quarter == 0, UnitClass{quarter, 0}};
}

CaseLemmaReport verify_case_lemmas(int n, int k) {
    CaseLemmaReport r;
    r.uvw = case_uvw(n, k, false);
    ExponentSet s = enumerate_s(n, k);
    const int64_t m = pow3i(n) - 1;
    const int64_t d = cm_exponent_mod(n, k);
    const int64_t r3k = (2 * d - 1) % m; // 3^k reduced, since 2d = 3^k + 1

    std::set<int64_t> cond1, cond2;
    for (int64_t j : s.members) {
        const int64_t join = (j * (r3k + 1)) % m; // (3^k + 1) * j
        const int64_t mjd = (m - (j * d) % m) % m;
        const int64_t m2jd = (2 * mjd) % m;
        const int wj = wt(j, n), wshift = wt((j * r3k) % m, n);
        const int wmjd = wt(mjd, n);
        const bool c1 = wj + wshift == wt(join, n) && 2 * wmjd == wt(m2jd, n) + 2;
        const bool c2 = wj + wshift == wt(join, n) + 2 && 2 * wmjd == wt(m2jd, n);
        if (c1 == c2)
            fail(errc::lemma_violation,
                 "weight dichotomy failed at j = " + std::to_string(j));
        (c1 ? cond1 : cond2).insert(coset_of(j, n).leader);
    }

    const int64_t lu = coset_of(r.uvw.u, n).leader;
    const int64_t lv = coset_of(r.uvw.v, n).leader;
    const int64_t lw = coset_of(r.uvw.w, n).leader;
    std::set<int64_t> want1, want2;
    if (r.uvw.case_tag == CaseTag::case_3t1) {
        want1 = {lu, lw};
        want2 = {lv};
    } else {
        want1 = {lu, lv};
        want2 = {lw};
    }
    if (cond1 != want1 || cond2 != want2)
        fail(errc::lemma_violation, "partition does not match the proven coset unions");

    std::set<int64_t> united;
    for (int64_t x : {r.uvw.u, r.uvw.v, r.uvw.w})
        for (int64_t mem : coset_of(x, n).members) united.insert(mem);
    if (!std::equal(united.begin(), united.end(), s.members.begin(), s.members.end()))
        fail(errc::lemma_violation, "exponent set differs from the three-coset union");

    r.s_size = static_cast<int64_t>(s.members.size());
    r.cond1_leaders.assign(cond1.begin(), cond1.end());
    r.cond2_leaders.assign(cond2.begin(), cond2.end());
    return r;
}

} // namespace cmbent
