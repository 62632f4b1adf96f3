#include "cmbent/eisenstein.hpp"

namespace cmbent {

Eisenstein Eisenstein::operator*(const Eisenstein& o) const {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd*w^2 and w^2 = -1 - w.
    const mpz_class& c = o.a_;
    const mpz_class& d = o.b_;
    mpz_class bd = b_ * d;
    return {a_ * c - bd, a_ * d + b_ * c - bd};
}

std::string Eisenstein::str() const {
    return a_.get_str() + (sgn(b_) < 0 ? "" : "+") + b_.get_str() + "w";
}

Eisenstein Eisenstein::omega_power(long t) {
    switch (((t % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
    }
}

mpz_class pow3(int n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(n));
    return r;
}

Eisenstein render_unit(int n, UnitClass u) {
    if (n < 0) fail(errc::bad_parameters, "negative n");
    int quarter = ((u.quarter % 4) + 4) % 4;
    if (quarter % 2 != n % 2)
        fail(errc::not_representable,
             "i^" + std::to_string(quarter) + " * 3^(" + std::to_string(n) +
                 "/2) is not an Eisenstein integer");
    Eisenstein base;
    if (n % 2 == 0) {
        // i^quarter is +-1 and 3^(n/2) is an integer.
        mpz_class mag = pow3(n / 2);
        base = Eisenstein(quarter == 0 ? mag : -mag, 0);
    } else {
        // i^quarter = +-i and i*sqrt(3) = w - w^2 = 1 + 2w.
        mpz_class mag = pow3((n - 1) / 2);
        base = Eisenstein(mag, 2 * mag);
        if (quarter == 3) base = -base;
    }
    return base * Eisenstein::omega_power(u.g);
}

UnitClass classify_unit(int n, const Eisenstein& x) {
    if (x.norm() != pow3(n))
        fail(errc::norm_mismatch, "norm of " + x.str() + " is not 3^" + std::to_string(n));
    for (int quarter = 0; quarter < 4; ++quarter) {
        if (quarter % 2 != n % 2) continue;
        for (int g = 0; g < 3; ++g) {
            UnitClass u{quarter, g};
            if (render_unit(n, u) == x) return u;
        }
    }
    fail(errc::no_match, x.str() + " has norm 3^" + std::to_string(n) +
                             " but is not i^q * w^g * 3^(n/2)");
}

} // namespace cmbent
