#pragma once

#include <gmpxx.h>

#include <string>

#include "cmbent/errors.hpp"

namespace cmbent {

/** Exact element a + b*w of Z[w], w = exp(2*pi*i/3), with w^2 = -1 - w. */
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}
    Eisenstein(long a, long b) : a_(a), b_(b) {}

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Eisenstein operator+(const Eisenstein& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Eisenstein operator-(const Eisenstein& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Eisenstein operator-() const { return {-a_, -b_}; }
    Eisenstein operator*(const Eisenstein& o) const;
    bool operator==(const Eisenstein& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    /** Complex conjugate; conj(w) = w^2, so conj(a + bw) = (a - b) - bw. */
    Eisenstein conj() const { return {a_ - b_, -b_}; }

    /** Squared modulus a^2 - ab + b^2; multiplicative, nonnegative. */
    mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    std::string str() const;

    static Eisenstein omega() { return {0, 1}; }
    /** w^t for any integer t (reduced mod 3): 0 -> 1, 1 -> w, 2 -> -1-w. */
    static Eisenstein omega_power(long t);
    /** The ramified prime w - 1 of norm 3. */
    static Eisenstein pi() { return {-1, 1}; }

private:
    mpz_class a_, b_;
};

/** Phase decomposition i^quarter * w^g of a Walsh value of modulus 3^(n/2). */
struct UnitClass {
    int quarter = 0; // exponent of i, mod 4
    int g = 0;       // exponent of w, mod 3
    bool operator==(const UnitClass&) const = default;
};

mpz_class pow3(int n);

/**
 * Exact value of i^quarter * w^g * 3^(n/2). Requires quarter == n (mod 2);
 * otherwise the value involves a stray sqrt(3) and lies outside Z[w].
 * For odd n the factor i*3^(1/2) is realized as w - w^2 = 1 + 2w.
 */
Eisenstein render_unit(int n, UnitClass u);

/**
 * Inverse of render_unit: the unique (quarter, g) rendering to x.
 * Requires norm(x) = 3^n. A norm mismatch throws NormMismatch; a value of
 * correct norm matching no class cannot arise from a genuine bent spectrum
 * and throws NoMatch to flag the upstream bug.
 */
UnitClass classify_unit(int n, const Eisenstein& x);

} // namespace cmbent
