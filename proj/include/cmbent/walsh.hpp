#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmbent/eisenstein.hpp"
#include "cmbent/gf3.hpp"

namespace cmbent {

/** Values of a map F_{3^n} -> F_3, indexed by lexicographic element rank. */
struct FunctionTable {
    std::vector<uint8_t> values;
};

/** Exact Walsh spectrum: entry[rank(lambda)] = sum_x w^(f(x) - Tr(lambda*x)). */
struct WalshSpectrum {
    std::vector<Eisenstein> entries;
};

/** Direct double-loop oracle, cost 9^n; refused above n = 6. */
WalshSpectrum walsh_naive(const FieldCtx& ctx, const FunctionTable& f);

/**
 * Fast exact transform: tabulate w^f over the additive group, run an n-stage
 * radix-3 butterfly for the coordinate-wise character sums G(y), then map
 * lambda to y through the Gram matrix of the trace form (Tr(lambda*x) is the
 * coordinate pairing of M*lambda with x). Identical output to walsh_naive.
 * Butterfly arithmetic stays in int64: partial sums after stage s are sums of
 * 3^s roots of unity, so coefficients stay within 2*3^13 by a wide margin.
 */
WalshSpectrum walsh_fast(const FieldCtx& ctx, const FunctionTable& f, int threads = 1);

/** True iff every entry has norm exactly 3^n. */
bool bent_check(const FieldCtx& ctx, const WalshSpectrum& s);

/** True iff the norms sum to 3^(2n), as they must for any function table. */
bool parseval_check(const FieldCtx& ctx, const WalshSpectrum& s);

/**
 * Spectrum classification. For a weakly regular spectrum every entry is
 * i^quarter * w^(g(lambda)) * 3^(n/2) with one shared quarter; the quarter
 * goes into unit (with unit.g = 0, all w-phase lives in the dual table) and
 * g becomes the dual. regular means the shared unit is exactly 1.
 */
struct BentReport {
    bool is_bent = false;
    bool weakly_regular = false;
    bool regular = false;
    std::optional<UnitClass> unit;
    std::optional<FunctionTable> dual;
};

BentReport classify(const FieldCtx& ctx, const WalshSpectrum& s);

/** Table of Tr(a * x^d) with d = (3^k + 1)/2; requires a != 0, k odd, gcd(n, k) = 1. */
FunctionTable cm_function(const FieldCtx& ctx, FieldElement a, int k);

} // namespace cmbent
