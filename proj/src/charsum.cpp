#include "cmbent/charsum.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace cmbent {

namespace {

void check_small(const FieldCtx& ctx) {
    if (ctx.n() > 5) fail(errc::too_large, "character sums capped at n = 5");
}

std::vector<std::complex<double>> unit_roots(int64_t order) {
    std::vector<std::complex<double>> root(order);
    for (int64_t r = 0; r < order; ++r)
        root[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                      static_cast<double>(order));
    return root;
}

std::array<std::complex<double>, 3> cube_roots() {
    std::array<std::complex<double>, 3> w3;
    for (int t = 0; t < 3; ++t)
        w3[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / 3.0);
    return w3;
}

/** trace(g^j) for j = 0 .. q-2, walking the generator. */
std::vector<int> trace_walk(const FieldCtx& ctx) {
    std::vector<int> tr(ctx.order());
    FieldElement x = ctx.one();
    for (int64_t j = 0; j < ctx.order(); ++j) {
        tr[j] = ctx.trace(x);
        x = ctx.mul(x, ctx.generator());
    }
    return tr;
}

/** G(chi_m) for every m at once; cost (q-1)^2 terms. */
std::vector<std::complex<double>> all_gauss_sums(const FieldCtx& ctx) {
    const int64_t order = ctx.order();
    const auto root = unit_roots(order);
    const auto w3 = cube_roots();
    const auto tr = trace_walk(ctx);
    std::vector<std::complex<double>> g(order);
    for (int64_t m = 0; m < order; ++m) {
        std::complex<double> acc = 0.0;
        for (int64_t j = 0; j < order; ++j) acc += w3[tr[j]] * root[m * j % order];
        g[m] = acc;
    }
    return g;
}

std::complex<double> i_power(int quarter) {
    switch (((quarter % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

MultiplicativeCharacter character(const FieldCtx& ctx, int64_t order_index) {
    check_small(ctx);
    const int64_t order = ctx.order();
    return {&ctx, ((order_index % order) + order) % order};
}

std::complex<double> chi_at(const MultiplicativeCharacter& chi, FieldElement x) {
    if (x.is_zero()) return 0.0;
    const FieldCtx& ctx = *chi.ctx;
    GeneratorTable table(ctx);
    return unit_roots(ctx.order())[chi.order_index * table.log(x) % ctx.order()];
}

std::complex<double> gauss_sum(const MultiplicativeCharacter& chi) {
    const FieldCtx& ctx = *chi.ctx;
    const int64_t order = ctx.order();
    const auto root = unit_roots(order);
    const auto w3 = cube_roots();
    const auto tr = trace_walk(ctx);
    std::complex<double> acc = 0.0;
    for (int64_t j = 0; j < order; ++j) acc += w3[tr[j]] * root[chi.order_index * j % order];
    return acc;
}

GaussReport check_gauss_identities(const FieldCtx& ctx) {
    check_small(ctx);
    const int64_t order = ctx.order();
    const auto g = all_gauss_sums(ctx);

    GaussReport rep;
    rep.q = ctx.q();
    double trivial_abs = std::abs(g[0] - std::complex<double>(-1.0, 0.0));
    double norm_rel = 0.0;
    double conjugate_abs = 0.0;
    double frobenius_abs = 0.0;
    for (int64_t m = 1; m < order; ++m)
        norm_rel = std::max(norm_rel, std::abs(std::norm(g[m]) - static_cast<double>(rep.q)) /
                                          static_cast<double>(rep.q));
    for (int64_t m = 0; m < order; ++m) {
        // chi_m(-1) = (-1)^m because -1 is the half-order power of g
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        conjugate_abs = std::max(conjugate_abs, std::abs(g[(order - m) % order] - sign * std::conj(g[m])));
        frobenius_abs = std::max(frobenius_abs, std::abs(g[3 * m % order] - g[m]));
    }
    const int n = ctx.n();
    const std::complex<double> quad_target = (n % 2 == 0 ? -1.0 : 1.0) * i_power(n) *
                                             std::pow(3.0, static_cast<double>(n) / 2.0);
    const double quadratic_abs = std::abs(g[order / 2] - quad_target);

    rep.identities = {{"trivial_abs", trivial_abs},
                      {"norm_rel", norm_rel},
                      {"conjugate_abs", conjugate_abs},
                      {"frobenius_abs", frobenius_abs},
                      {"quadratic_abs", quadratic_abs}};
    for (const auto& [name, dev] : rep.identities)
        rep.max_abs_error = std::max(rep.max_abs_error, dev);
    return rep;
}

double check_inversion(const FieldCtx& ctx, FieldElement y) {
    check_small(ctx);
    if (y.is_zero()) fail(errc::y_zero, "inversion formula requires nonzero y");
    const int64_t order = ctx.order();
    const auto g = all_gauss_sums(ctx);
    const auto root = unit_roots(order);
    GeneratorTable table(ctx);
    const int64_t logy = table.log(y);
    std::complex<double> acc = 0.0;
    for (int64_t m = 0; m < order; ++m) acc += g[m] * std::conj(root[m * logy % order]);
    acc /= static_cast<double>(order);
    return std::abs(acc - cube_roots()[ctx.trace(y)]);
}

} // namespace cmbent
