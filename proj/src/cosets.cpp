#include "cmbent/cosets.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "cmbent/trits.hpp"

namespace cmbent {

std::vector<Coset> cosets_mod(int n) {
    int64_t m = pow3i(n) - 1;
    std::vector<bool> seen(m, false);
    std::vector<Coset> out;
    for (int64_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        Coset c;
        c.leader = s;
        int64_t x = s;
        do {
            seen[x] = true;
            c.members.push_back(x);
            x = x * 3 % m;
        } while (x != s);
        out.push_back(std::move(c));
    }
    return out; // ascending scan order means sorted by leader already
}

Coset coset_of(int64_t j, int n) {
    int64_t m = pow3i(n) - 1;
    int64_t s = reduce_mod(j, n);
    // Walk the orbit once to find the leader, then emit from the leader.
    int64_t leader = s;
    int64_t x = s * 3 % m;
    while (x != s) {
        leader = std::min(leader, x);
        x = x * 3 % m;
    }
    Coset c;
    c.leader = leader;
    x = leader;
    do {
        c.members.push_back(x);
        x = x * 3 % m;
    } while (x != leader);
    return c;
}

int coset_size(int64_t j, int n) {
    int64_t m = pow3i(n) - 1;
    int64_t s = reduce_mod(j, n);
    int size = 1;
    int64_t x = s * 3 % m;
    while (x != s) {
        ++size;
        x = x * 3 % m;
    }
    return size;
}

namespace {

void check_term_coeff(const FieldCtx& ctx, const TraceTerm& t, int m) {
    if (ctx.pow(t.coeff, pow3i(m)) != t.coeff)
        fail(errc::malformed_term, "coefficient of x^" + std::to_string(t.exponent) +
                                       " lies outside F_3^" + std::to_string(m));
}

int term_degree(const FieldCtx& ctx, const TraceTerm& t) {
    if (t.exponent < 0) fail(errc::malformed_term, "negative exponent");
    int m = t.trace_degree ? *t.trace_degree : coset_size(t.exponent, ctx.n());
    if (m < 1 || ctx.n() % m != 0)
        fail(errc::malformed_term,
             "trace degree " + std::to_string(m) + " does not divide " + std::to_string(ctx.n()));
    // x^exponent must stay inside the trace's source field at every x
    if (m % coset_size(t.exponent, ctx.n()) != 0)
        fail(errc::malformed_term, "exponent " + std::to_string(t.exponent) +
                                       " escapes F_3^" + std::to_string(m));
    check_term_coeff(ctx, t, m);
    return m;
}

} // namespace

int eval_trace_poly(const FieldCtx& ctx, const TracePolynomial& p, FieldElement x) {
    int acc = 0;
    for (const TraceTerm& t : p.terms) {
        int m = term_degree(ctx, t);
        FieldElement v = ctx.mul(t.coeff, ctx.pow(x, t.exponent));
        acc += ctx.subfield_trace(v, m).trit(0);
    }
    if (!x.is_zero()) acc += p.constant;
    return acc % 3;
}

std::vector<uint8_t> eval_trace_poly_table(const FieldCtx& ctx, const TracePolynomial& p) {
    const int64_t q = ctx.q();
    const int64_t order = q - 1;
    std::vector<uint8_t> out(q, 0);
    out[0] = static_cast<uint8_t>(eval_trace_poly(ctx, p, ctx.zero()));

    GeneratorTable table(ctx);
    struct Walk {
        int64_t acc;  // exponent of the term value at the current point
        int64_t step; // exponent of x in the term, reduced
        int m;        // subfield trace degree
    };
    std::vector<Walk> walks;
    for (const TraceTerm& t : p.terms) {
        int m = term_degree(ctx, t);
        if (t.coeff.is_zero()) continue;
        walks.push_back({table.log(t.coeff), reduce_mod(t.exponent, ctx.n()), m});
    }
    for (int64_t i = 0; i < order; ++i) {
        int acc = p.constant;
        for (Walk& wk : walks) {
            // Subfield trace of g^(wk.acc): sum the frobenius orbit, which
            // only shifts the exponent by factors of 3.
            FieldElement s = ctx.zero();
            int64_t e = wk.acc;
            for (int r = 0; r < wk.m; ++r) {
                s = ctx.add(s, table.power(e));
                e = e * 3 % order;
            }
            assert((s.raw() & ~3u) == 0 && "subfield trace must land in F_3");
            acc += s.trit(0);
            wk.acc += wk.step;
            if (wk.acc >= order) wk.acc -= order;
        }
        out[ctx.index_of(table.power(i))] = static_cast<uint8_t>(acc % 3);
    }
    return out;
}

bool pointwise_equal(const FieldCtx& ctx, const TracePolynomial& p,
                     std::span<const uint8_t> table) {
    if (static_cast<int64_t>(table.size()) != ctx.q())
        fail(errc::size_mismatch, "table does not cover the field");
    std::vector<uint8_t> mine = eval_trace_poly_table(ctx, p);
    return std::equal(mine.begin(), mine.end(), table.begin());
}

} // namespace cmbent
