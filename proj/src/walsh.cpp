#include "cmbent/walsh.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "cmbent/trits.hpp"

namespace cmbent {

namespace {

void check_table(const FieldCtx& ctx, const FunctionTable& f) {
    if (static_cast<int64_t>(f.values.size()) != ctx.q())
        fail(errc::size_mismatch, "function table does not cover the field");
}

// Run fn over [0, count) split into contiguous chunks, one per worker. All
// writes are to disjoint ranges, so the result is schedule-independent.
template <typename Fn>
void parallel_chunks(int64_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2 * threads) {
        fn(int64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    int64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int64_t lo = t * chunk;
        int64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace

WalshSpectrum walsh_naive(const FieldCtx& ctx, const FunctionTable& f) {
    if (ctx.n() > 6) fail(errc::too_large, "naive transform capped at n = 6");
    check_table(ctx, f);
    const int64_t q = ctx.q();
    WalshSpectrum s;
    s.entries.reserve(q);
    for (int64_t li = 0; li < q; ++li) {
        FieldElement lam = ctx.element(li);
        Eisenstein acc;
        for (int64_t xi = 0; xi < q; ++xi) {
            int e = (f.values[xi] + 3 - ctx.trace(ctx.mul(lam, ctx.element(xi)))) % 3;
            acc = acc + Eisenstein::omega_power(e);
        }
        s.entries.push_back(acc);
    }
    return s;
}

WalshSpectrum walsh_fast(const FieldCtx& ctx, const FunctionTable& f, int threads) {
    check_table(ctx, f);
    if (!ctx.gram_invertible())
        fail(errc::singular_gram, "trace form is degenerate; modulus cannot define a field");
    const int n = ctx.n();
    const int64_t q = ctx.q();

    // Working pairs (a, b) = a + b*w per additive-group index.
    std::vector<std::array<int64_t, 2>> buf(q);
    for (int64_t x = 0; x < q; ++x) {
        static constexpr int64_t kOmega[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
        buf[x] = {kOmega[f.values[x]][0], kOmega[f.values[x]][1]};
    }

    // n radix-3 stages over digit positions. After all stages buf[y] holds
    // G(y) = sum_x w^(f(x) - <y, x>) for the coordinate dot product.
    for (int st = 0; st < n; ++st) {
        const int64_t stride = pow3i(st);
        const int64_t blocks = q / (3 * stride);
        parallel_chunks(blocks, threads, [&](int64_t blo, int64_t bhi) {
            for (int64_t blk = blo; blk < bhi; ++blk) {
                int64_t base = blk * 3 * stride;
                for (int64_t off = 0; off < stride; ++off) {
                    auto& p0 = buf[base + off];
                    auto& p1 = buf[base + off + stride];
                    auto& p2 = buf[base + off + 2 * stride];
                    const int64_t a0 = p0[0], b0 = p0[1];
                    const int64_t a1 = p1[0], b1 = p1[1];
                    const int64_t a2 = p2[0], b2 = p2[1];
                    // w*(a+bw) = -b + (a-b)w ; w^2*(a+bw) = (b-a) - a*w.
                    p0 = {a0 + a1 + a2, b0 + b1 + b2};
                    p1 = {a0 + (b1 - a1) - b2, b0 - a1 + (a2 - b2)};
                    p2 = {a0 - b1 + (b2 - a2), b0 + (a1 - b1) - a2};
                }
            }
        });
    }

    // entries[lambda] = G(M * lambda) with M the Gram matrix of the trace form.
    WalshSpectrum s;
    s.entries.resize(q);
    const auto& gram = ctx.gram();
    parallel_chunks(q, threads, [&](int64_t lo, int64_t hi) {
        std::array<int, kMaxDegree> lam{};
        for (int64_t li = lo; li < hi; ++li) {
            int64_t v = li;
            for (int i = 0; i < n; ++i) {
                lam[i] = static_cast<int>(v % 3);
                v /= 3;
            }
            int64_t y = 0;
            for (int t = n - 1; t >= 0; --t) {
                int dot = 0;
                for (int j = 0; j < n; ++j) dot += gram[t][j] * lam[j];
                y = y * 3 + dot % 3;
            }
            s.entries[li] = Eisenstein(static_cast<long>(buf[y][0]), static_cast<long>(buf[y][1]));
        }
    });
    return s;
}

bool bent_check(const FieldCtx& ctx, const WalshSpectrum& s) {
    mpz_class target = pow3(ctx.n());
    for (const Eisenstein& e : s.entries)
        if (e.norm() != target) return false;
    return true;
}

bool parseval_check(const FieldCtx& ctx, const WalshSpectrum& s) {
    if (static_cast<int64_t>(s.entries.size()) != ctx.q())
        fail(errc::size_mismatch, "spectrum does not cover the field");
    mpz_class sum = 0;
    for (const Eisenstein& e : s.entries) sum += e.norm();
    return sum == pow3(2 * ctx.n());
}

BentReport classify(const FieldCtx& ctx, const WalshSpectrum& s) {
    if (static_cast<int64_t>(s.entries.size()) != ctx.q())
        fail(errc::size_mismatch, "spectrum does not cover the field");
    BentReport r;
    r.is_bent = bent_check(ctx, s);
    if (!r.is_bent) return r;

    const int n = ctx.n();
    // The six norm-3^n values of matching parity, i^quarter * w^g * 3^(n/2).
    std::vector<std::pair<Eisenstein, UnitClass>> cands;
    for (int quarter = n % 2; quarter < 4; quarter += 2)
        for (int g = 0; g < 3; ++g)
            cands.emplace_back(render_unit(n, {quarter, g}), UnitClass{quarter, g});

    FunctionTable dual;
    dual.values.reserve(s.entries.size());
    int shared_quarter = -1;
    for (const Eisenstein& e : s.entries) {
        const UnitClass* found = nullptr;
        for (const auto& [val, uc] : cands)
            if (val == e) {
                found = &uc;
                break;
            }
        if (!found)
            fail(errc::no_match, "norm-3^n entry outside the unit classes: " + e.str());
        if (shared_quarter < 0) shared_quarter = found->quarter;
        if (found->quarter != shared_quarter) return r; // bent but not weakly regular
        dual.values.push_back(static_cast<uint8_t>(found->g));
    }
    r.weakly_regular = true;
    r.regular = shared_quarter == 0;
    r.unit = UnitClass{shared_quarter, 0};
    r.dual = std::move(dual);
    return r;
}

FunctionTable cm_function(const FieldCtx& ctx, FieldElement a, int k) {
    if (a.is_zero()) fail(errc::bad_parameters, "coefficient a must be nonzero");
    check_cm_parameters(ctx.n(), k);
    const int64_t d = cm_exponent_mod(ctx.n(), k);
    FunctionTable f;
    f.values.assign(ctx.q(), 0);
    // Walk x = g^i and a*x^d = a*(g^d)^i together; one table pass total.
    FieldElement g = ctx.generator();
    FieldElement gd = ctx.pow(g, d);
    FieldElement x = ctx.one();
    FieldElement y = a;
    for (int64_t i = 0; i < ctx.order(); ++i) {
        f.values[ctx.index_of(x)] = static_cast<uint8_t>(ctx.trace(y));
        x = ctx.mul(x, g);
        y = ctx.mul(y, gd);
    }
    return f;
}

} // namespace cmbent
