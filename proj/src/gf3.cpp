#include "cmbent/gf3.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "cmbent/trits.hpp"

namespace cmbent {

namespace {

// Dense F_3[x] polynomials for the construction-time irreducibility proof;
// coefficients ascending, no trailing zeros.
using Poly = std::vector<uint8_t>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic polynomial f.
Poly poly_mod(Poly p, const Poly& f) {
    int df = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(p.size()) - 1; i >= df; --i) {
        int c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (int j = 0; j < df; ++j)
            p[i - df + j] = static_cast<uint8_t>((p[i - df + j] + (3 - c) * f[j]) % 3);
    }
    strip(p);
    return p;
}

// Cube mod f; (sum a_i x^i)^3 = sum a_i x^(3i) in characteristic 3.
Poly poly_cube_mod(const Poly& p, const Poly& f) {
    if (p.empty()) return {};
    Poly r(3 * (p.size() - 1) + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) r[3 * i] = p[i];
    return poly_mod(std::move(r), f);
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint8_t>((a[i] + 3 - b[i]) % 3);
    strip(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        // Make b monic so poly_mod applies.
        Poly bm = b;
        if (bm.back() == 2)
            for (auto& c : bm) c = static_cast<uint8_t>((2 * c) % 3);
        a = poly_mod(std::move(a), bm);
        std::swap(a, b);
    }
    return a;
}

std::vector<int64_t> prime_factors(int64_t m) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

// Rabin test: f of degree n is irreducible iff x^(3^n) = x mod f and
// gcd(x^(3^(n/r)) - x, f) = 1 for every prime r dividing n. The frobenius
// powers are built by iterated cubing.
bool is_irreducible(const Poly& f, int n) {
    if (n == 1) return true;
    Poly x{0, 1};
    std::vector<Poly> frob(n + 1); // frob[i] = x^(3^i) mod f
    frob[0] = x;
    for (int i = 1; i <= n; ++i) frob[i] = poly_cube_mod(frob[i - 1], f);
    if (frob[n] != x) return false;
    for (int64_t r : prime_factors(n)) {
        Poly g = poly_gcd(f, poly_sub(frob[n / r], x));
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldCtx::FieldCtx(int n, std::span<const int> modulus) {
    if (n < 1 || n > kMaxDegree)
        fail(errc::bad_parameters, "n must be in [1, 13], got " + std::to_string(n));
    if (static_cast<int>(modulus.size()) != n + 1)
        fail(errc::reject_degree, "modulus needs " + std::to_string(n + 1) + " coefficients, got " +
                                      std::to_string(modulus.size()));
    for (int c : modulus)
        if (c < 0 || c > 2) fail(errc::reject_degree, "modulus coefficients must be trits");
    if (modulus[n] == 0) fail(errc::reject_degree, "leading coefficient is zero");

    n_ = n;
    q_ = pow3i(n);
    modulus_.assign(modulus.begin(), modulus.end());
    if (modulus_[n] == 2) // scale to monic; the ideal is unchanged
        for (auto& c : modulus_) c = (2 * c) % 3;

    Poly f(modulus_.begin(), modulus_.end());
    if (!is_irreducible(f, n))
        fail(errc::reject_reducible, "modulus is reducible over F_3");

    // Residue class of x: a constant for n = 1, the monomial x otherwise.
    if (n == 1) {
        alpha_.set_trit(0, (3 - modulus_[0]) % 3);
    } else {
        alpha_.set_trit(1, 1);
    }

    // Basis traces via raw frobenius power sums, then the Gram matrix of the
    // trace form through the now-available linear trace.
    std::array<FieldElement, kMaxDegree> alpha_pow;
    alpha_pow[0] = element(1);
    for (int i = 1; i < n; ++i) alpha_pow[i] = mul(alpha_pow[i - 1], alpha_);
    for (int i = 0; i < n; ++i) {
        FieldElement s = alpha_pow[i];
        FieldElement t = alpha_pow[i];
        for (int r = 1; r < n; ++r) {
            t = mul(mul(t, t), t);
            s = add(s, t);
        }
        assert((s.raw() & ~3u) == 0 && "trace must be constant");
        trace_basis_[i] = static_cast<uint8_t>(s.trit(0));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram_[i][j] = static_cast<uint8_t>(trace(mul(alpha_pow[i], alpha_pow[j])));

    // Smallest primitive element by index. Order checks against each prime
    // divisor of q-1 suffice since the group is cyclic.
    std::vector<int64_t> ps = prime_factors(q_ - 1);
    for (int64_t idx = 1; idx < q_; ++idx) {
        FieldElement u = element(idx);
        bool primitive = true;
        for (int64_t p : ps)
            if (pow(u, (q_ - 1) / p) == one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            generator_ = u;
            return;
        }
    }
    fail(errc::lemma_violation, "no primitive element found; field construction broken");
}

FieldCtx FieldCtx::builtin(int n) {
    std::vector<int> m = builtin_modulus(n);
    return FieldCtx(n, m);
}

std::vector<int> FieldCtx::builtin_modulus(int n) {
    // Per degree: the monic irreducible polynomial with x primitive that is
    // smallest when coefficients are compared from degree n-1 down to the
    // constant. Fixed so exponent-form outputs are reproducible.
    static const std::vector<std::vector<int>> table = {
        {},
        {1, 1},
        {2, 1, 1},
        {1, 2, 0, 1},
        {2, 1, 0, 0, 1},
        {1, 2, 0, 0, 0, 1},
        {2, 1, 0, 0, 0, 0, 1},
        {1, 2, 1, 0, 0, 0, 0, 1},
        {2, 0, 0, 1, 0, 0, 0, 0, 1},
        {1, 0, 1, 2, 0, 0, 0, 0, 0, 1},
        {2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1},
        {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1},
        {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    };
    if (n < 1 || n > kMaxDegree)
        fail(errc::bad_parameters, "no builtin modulus for n = " + std::to_string(n));
    return table[n];
}

FieldElement FieldCtx::element(int64_t index) const {
    if (index < 0 || index >= q_)
        fail(errc::bad_parameters, "element index " + std::to_string(index) + " out of range");
    FieldElement e;
    for (int i = 0; i < n_; ++i) {
        e.set_trit(i, static_cast<int>(index % 3));
        index /= 3;
    }
    return e;
}

int64_t FieldCtx::index_of(FieldElement u) const {
    int64_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * 3 + u.trit(i);
    return v;
}

FieldElement FieldCtx::from_trits(std::span<const int> trits) const {
    if (static_cast<int>(trits.size()) != n_)
        fail(errc::size_mismatch, "expected " + std::to_string(n_) + " trits");
    FieldElement e;
    for (int i = 0; i < n_; ++i) {
        if (trits[i] < 0 || trits[i] > 2) fail(errc::bad_parameters, "coefficient not a trit");
        e.set_trit(i, trits[i]);
    }
    return e;
}

FieldElement FieldCtx::add(FieldElement u, FieldElement v) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.set_trit(i, (u.trit(i) + v.trit(i)) % 3);
    return r;
}

FieldElement FieldCtx::sub(FieldElement u, FieldElement v) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.set_trit(i, (u.trit(i) + 3 - v.trit(i)) % 3);
    return r;
}

FieldElement FieldCtx::neg(FieldElement u) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.set_trit(i, (3 - u.trit(i)) % 3);
    return r;
}

FieldElement FieldCtx::mul(FieldElement u, FieldElement v) const {
    int acc[2 * kMaxDegree - 1] = {};
    for (int i = 0; i < n_; ++i) {
        int a = u.trit(i);
        if (a == 0) continue;
        for (int j = 0; j < n_; ++j) acc[i + j] += a * v.trit(j);
    }
    for (int i = 2 * n_ - 2; i >= n_; --i) {
        int c = acc[i] % 3;
        if (c == 0) continue;
        for (int j = 0; j < n_; ++j) acc[i - n_ + j] += (3 - c) * modulus_[j];
    }
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.set_trit(i, acc[i] % 3);
    return r;
}

FieldElement FieldCtx::inverse(FieldElement u) const {
    if (u.is_zero()) fail(errc::zero_to_negative_power, "inverse of zero");
    return pow(u, q_ - 2);
}

FieldElement FieldCtx::pow(FieldElement u, int64_t e) const {
    if (u.is_zero()) {
        if (e < 0) fail(errc::zero_to_negative_power, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    FieldElement r = one();
    FieldElement b = u;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FieldCtx::trace(FieldElement u) const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += u.trit(i) * trace_basis_[i];
    return s % 3;
}

FieldElement FieldCtx::subfield_trace(FieldElement u, int m) const {
    if (m < 1 || n_ % m != 0)
        fail(errc::bad_parameters, "subfield degree " + std::to_string(m) + " does not divide " +
                                       std::to_string(n_));
    if (pow(u, pow3i(m)) != u)
        fail(errc::not_in_subfield, "element is not fixed by frobenius^" + std::to_string(m));
    FieldElement s = u;
    FieldElement t = u;
    for (int i = 1; i < m; ++i) {
        t = mul(mul(t, t), t);
        s = add(s, t);
    }
    assert((s.raw() & ~3u) == 0 && "subfield trace must land in F_3");
    return s;
}

int FieldCtx::eta(FieldElement u) const {
    if (u.is_zero()) fail(errc::eta_of_zero, "quadratic character of zero");
    FieldElement r = pow(u, (q_ - 1) / 2);
    if (r == one()) return 1;
    assert(r == neg(one()));
    return -1;
}

bool FieldCtx::gram_invertible() const {
    // Gaussian elimination mod 3 on a copy.
    std::array<std::array<int, kMaxDegree>, kMaxDegree> m{};
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[i][j] = gram_[i][j];
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        int inv = m[col][col] == 1 ? 1 : 2;
        for (int j = 0; j < n_; ++j) m[col][j] = m[col][j] * inv % 3;
        for (int row = 0; row < n_; ++row) {
            if (row == col || m[row][col] == 0) continue;
            int c = m[row][col];
            for (int j = 0; j < n_; ++j) m[row][j] = (m[row][j] + (3 - c) * m[col][j]) % 3;
        }
    }
    return true;
}

GeneratorTable::GeneratorTable(const FieldCtx& ctx) : ctx_(&ctx) {
    int64_t order = ctx.order();
    pow_.resize(order);
    log_.assign(ctx.q(), -1);
    FieldElement g = ctx.generator();
    FieldElement cur = ctx.one();
    for (int64_t i = 0; i < order; ++i) {
        pow_[i] = cur.raw();
        log_[ctx.index_of(cur)] = static_cast<int32_t>(i);
        cur = ctx.mul(cur, g);
    }
    assert(cur == ctx.one() && "generator order must be q-1");
}

FieldElement GeneratorTable::power(int64_t e) const {
    int64_t order = ctx_->order();
    e %= order;
    if (e < 0) e += order;
    return FieldElement::from_raw(pow_[e]);
}

int64_t GeneratorTable::log(FieldElement u) const {
    if (u.is_zero()) fail(errc::bad_parameters, "discrete log of zero");
    return log_[ctx_->index_of(u)];
}

} // namespace cmbent
