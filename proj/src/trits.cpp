#include "cmbent/trits.hpp"

#include <numeric>
#include <string>

namespace cmbent {

namespace {

void check_degree(int n) {
    if (n < 1 || n > 13) fail(errc::bad_parameters, "n must be in [1, 13], got " + std::to_string(n));
}

} // namespace

int64_t pow3i(int n) {
    int64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

int64_t reduce_mod(int64_t j, int n) {
    int64_t m = pow3i(n) - 1;
    int64_t r = j % m;
    return r < 0 ? r + m : r;
}

int64_t TritVector::value() const {
    int64_t v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * 3 + digits[i];
    return v;
}

int TritVector::weight() const {
    return std::accumulate(digits.begin(), digits.end(), 0);
}

int CarryVector::weight() const {
    return std::accumulate(bits.begin(), bits.end(), 0);
}

TritVector to_trits(int64_t j, int n) {
    check_degree(n);
    int64_t v = reduce_mod(j, n);
    TritVector t{n, std::vector<uint8_t>(n)};
    for (int i = 0; i < n; ++i) {
        t.digits[i] = static_cast<uint8_t>(v % 3);
        v /= 3;
    }
    return t;
}

int wt(int64_t j, int n) {
    check_degree(n);
    int64_t v = reduce_mod(j, n);
    int s = 0;
    while (v != 0) {
        s += static_cast<int>(v % 3);
        v /= 3;
    }
    return s;
}

int64_t sigma(int64_t j, int n) {
    check_degree(n);
    int64_t v = reduce_mod(j, n);
    int64_t s = 1;
    while (v != 0) {
        if (v % 3 == 2) s *= 2;
        v /= 3;
    }
    return s;
}

std::pair<TritVector, CarryVector> add_with_carry(const TritVector& x, const TritVector& y) {
    if (x.n != y.n) fail(errc::size_mismatch, "operand lengths differ");
    int n = x.n;
    TritVector z = to_trits(x.value() + y.value(), n);
    // Solve z_i + 3 c_i = x_i + y_i + c_(i-1) cyclically: the wraparound
    // carry c_(n-1) seeds position 0, so try both values and keep the one
    // that closes consistently. Exactly one does.
    for (int seed = 0; seed < 2; ++seed) {
        CarryVector c{std::vector<uint8_t>(n)};
        int prev = seed;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int ci = (x.digits[i] + y.digits[i] + prev - z.digits[i]);
            if (ci != 0 && ci != 3) { ok = false; break; }
            c.bits[i] = static_cast<uint8_t>(ci / 3);
            prev = c.bits[i];
        }
        if (ok && prev == seed) return {z, c};
    }
    fail(errc::lemma_violation, "no consistent carry vector; canonical range invariant broken");
}

WeightRelation eq_weight_condition_digits(int64_t x, int64_t y, int n) {
    TritVector xt = to_trits(x, n);
    TritVector yt = to_trits(y, n);
    bool all_le2 = true, some_lt2 = false;
    for (int i = 0; i < n; ++i) {
        int s = xt.digits[i] + yt.digits[i];
        if (s > 2) all_le2 = false;
        if (s < 2) some_lt2 = true;
    }
    if (all_le2 && some_lt2) return WeightRelation::equal;
    // +2 exactly when one carry fires: some position has digit sum >= 3,
    // its successor absorbs the carry (sum <= 1), everything else stays
    // below 3. Position arithmetic is cyclic.
    for (int a = 0; a < n; ++a) {
        int b = (a + 1) % n;
        if (xt.digits[a] + yt.digits[a] < 3) continue;
        if (xt.digits[b] + yt.digits[b] > 1) continue;
        bool rest_ok = true;
        for (int i = 0; i < n && rest_ok; ++i) {
            if (i == a || i == b) continue;
            if (xt.digits[i] + yt.digits[i] > 2) rest_ok = false;
        }
        if (rest_ok) return WeightRelation::plus2;
    }
    return WeightRelation::other;
}

WeightRelation eq_weight_condition(int64_t x, int64_t y, int n) {
    check_degree(n);
    TritVector xt = to_trits(x, n);
    TritVector yt = to_trits(y, n);
    auto [z, c] = add_with_carry(xt, yt);
    int diff = 2 * c.weight();
    WeightRelation direct = diff == 0   ? WeightRelation::equal
                            : diff == 2 ? WeightRelation::plus2
                                        : WeightRelation::other;
    // The +2 criterion needs two distinct positions a, a+1 and so cannot
    // express the single-position carry of n = 1.
    if (n >= 2 && direct != eq_weight_condition_digits(x, y, n))
        fail(errc::lemma_violation, "digit criteria disagree with carry count at x=" +
                                        std::to_string(x) + " y=" + std::to_string(y));
    return direct;
}

DoublingCases doubling_cases(int64_t j, int n) {
    check_degree(n);
    int64_t v = reduce_mod(j, n);
    int64_t half = (pow3i(n) - 1) / 2;
    if (v == 0) fail(errc::zero_input, "doubling criteria undefined at j = 0");
    if (v == half) fail(errc::half_point, "doubling criteria degenerate at j = (3^n-1)/2");

    TritVector jt = to_trits(v, n);
    DoublingCases r;
    r.eq = true;
    for (int i = 0; i < n; ++i)
        if (jt.digits[i] == 0) r.eq = false;
    // In the digits of -j (each 2 - j_i) the +2 pattern reads: one position
    // holding 2 whose successor holds 0, all others at most 1. Translated
    // back to j: j_a = 0, j_(a+1) = 2, and every other digit nonzero.
    for (int a = 0; a < n && !r.plus2; ++a) {
        int b = (a + 1) % n;
        if (jt.digits[a] != 0 || jt.digits[b] != 2) continue;
        bool rest_ok = true;
        for (int i = 0; i < n && rest_ok; ++i) {
            if (i == a || i == b) continue;
            if (jt.digits[i] == 0) rest_ok = false;
        }
        r.plus2 = rest_ok;
    }

    int lhs = 2 * wt(-v, n);
    int rhs = wt(-2 * v, n);
    if (r.eq != (lhs == rhs) || r.plus2 != (lhs == rhs + 2))
        fail(errc::lemma_violation, "doubling criteria disagree with weights at j=" +
                                        std::to_string(v));
    return r;
}

TritVector halving_patterns(const TritVector& h) {
    int64_t v = h.value();
    if (v % 2 != 0) fail(errc::odd_input, "cannot halve odd value " + std::to_string(v));
    return to_trits(v / 2, h.n);
}

void check_cm_parameters(int n, int k) {
    check_degree(n);
    if (k < 1 || k % 2 == 0)
        fail(errc::bad_parameters, "k must be odd and positive, got " + std::to_string(k));
    if (k > 39) fail(errc::bad_parameters, "k above 39 overflows the exact exponent");
    if (std::gcd(n, k) != 1)
        fail(errc::bad_parameters, "gcd(n, k) must be 1, got gcd(" + std::to_string(n) + ", " +
                                       std::to_string(k) + ")");
}

int64_t cm_exponent_exact(int k) {
    if (k < 1 || k % 2 == 0 || k > 39)
        fail(errc::bad_parameters, "k must be odd in [1, 39], got " + std::to_string(k));
    int64_t p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return (p + 1) / 2;
}

int64_t cm_exponent_mod(int n, int k) {
    check_cm_parameters(n, k);
    return reduce_mod(cm_exponent_exact(k), n);
}

WeightFloor weight_floor_scan(int n, int k) {
    check_cm_parameters(n, k);
    int64_t d = cm_exponent_mod(n, k);
    int64_t m = pow3i(n) - 1;
    WeightFloor r;
    r.min = 2 * n + 1;
    for (int64_t j = 1; j < m; ++j) {
        int s = wt(j, n) + wt(-j * d, n);
        if (s < r.min) {
            r.min = s;
            r.argmin.clear();
        }
        if (s == r.min) r.argmin.push_back(j);
    }
    return r;
}

} // namespace cmbent
