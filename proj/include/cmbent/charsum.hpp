#pragma once

#include <complex>
#include <map>
#include <string>

#include "cmbent/gf3.hpp"

namespace cmbent {

/**
 * Multiplicative character chi(g^j) = exp(2*pi*i*m*j/(q-1)) on the field of
 * the context, extended by chi(0) = 0. Floating point stays inside this
 * module; nothing here feeds the exact pipeline.
 */
struct MultiplicativeCharacter {
    const FieldCtx* ctx = nullptr;
    int64_t order_index = 0; // m, reduced mod q - 1
};

/** Builds a character; fields are capped at n = 5 to keep sums direct. */
MultiplicativeCharacter character(const FieldCtx& ctx, int64_t order_index);

std::complex<double> chi_at(const MultiplicativeCharacter& chi, FieldElement x);

/** G(chi) = sum over the field of w^trace(x) * chi(x), by direct summation. */
std::complex<double> gauss_sum(const MultiplicativeCharacter& chi);

/** Float verdicts on the Gauss-sum identities over one small field. */
struct GaussReport {
    int64_t q = 0;
    double max_abs_error = 0.0;
    std::map<std::string, double> identities;
};

/**
 * Checks across every character of the field: G(trivial) = -1; |G|^2 = q for
 * nontrivial chi (largest relative error under "norm_rel"); conjugation
 * G(conj(chi)) = chi(-1) * conj(G(chi)); invariance G(chi^3) = G(chi); and
 * the quadratic character's closed value (-1)^(n+1) * i^n * 3^(n/2).
 */
GaussReport check_gauss_identities(const FieldCtx& ctx);

/**
 * Deviation of the inversion formula at nonzero y: w^trace(y) against the
 * average of G(chi) * conj(chi(y)) over all q - 1 characters.
 */
double check_inversion(const FieldCtx& ctx, FieldElement y);

} // namespace cmbent
