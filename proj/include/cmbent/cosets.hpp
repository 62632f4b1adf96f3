#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmbent/gf3.hpp"

namespace cmbent {

/** Orbit of a residue mod 3^n - 1 under multiplication by 3. */
struct Coset {
    int64_t leader = 0;             // smallest member
    std::vector<int64_t> members;   // leader, 3*leader, 9*leader, ...

    int size() const { return static_cast<int>(members.size()); }
};

/** Full partition of [0, 3^n - 1) into cyclotomic cosets, sorted by leader. */
std::vector<Coset> cosets_mod(int n);

/** The coset containing j (reduced mod 3^n - 1), members starting from the leader. */
Coset coset_of(int64_t j, int n);

/** Orbit length of j without materializing the partition. */
int coset_size(int64_t j, int n);

/**
 * One term Tr(coeff * x^exponent) of a trace representation. The trace runs
 * from F_{3^m}, where m defaults to the orbit length of the exponent (then
 * x^exponent always lies in that subfield and the coefficient must too) but
 * can be pinned to any divisor of n via trace_degree; m = n gives the
 * absolute trace with an unconstrained coefficient. Exponents are kept as
 * given (not canonicalized to coset leaders). coeff_power records the
 * discrete log of the coefficient when the caller knows it, for exponent-form
 * rendering.
 */
struct TraceTerm {
    FieldElement coeff;
    int64_t exponent = 0;
    std::optional<int64_t> coeff_power;
    std::optional<int> trace_degree;
};

/**
 * Sum of trace terms plus a constant treated as the coefficient of x^(q-1):
 * it contributes 0 at x = 0 and its value elsewhere.
 */
struct TracePolynomial {
    std::vector<TraceTerm> terms;
    int constant = 0;
};

/** Evaluate at one point; MalformedTerm if a coefficient escapes its subfield. */
int eval_trace_poly(const FieldCtx& ctx, const TracePolynomial& p, FieldElement x);

/**
 * Evaluate over the whole field by walking generator exponents; output is
 * indexed like FunctionTable (lexicographic element rank).
 */
std::vector<uint8_t> eval_trace_poly_table(const FieldCtx& ctx, const TracePolynomial& p);

/** True iff the polynomial reproduces the table at every one of the 3^n points. */
bool pointwise_equal(const FieldCtx& ctx, const TracePolynomial& p,
                     std::span<const uint8_t> table);

} // namespace cmbent
