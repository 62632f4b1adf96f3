#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cmbent/cosets.hpp"
#include "cmbent/eisenstein.hpp"
#include "cmbent/gf3.hpp"

namespace cmbent {

/** Parameters of one bent instance Tr(a * x^d) with d = (3^k + 1)/2. */
struct CmParams {
    int n = 0;
    int k = 0;
    int64_t d = 0;     // exact (3^k + 1)/2
    int64_t d_mod = 0; // d reduced mod 3^n - 1
    FieldElement a;
};

/** Validates n, k and a != 0; checks gcd(d, 3^n - 1) = 2 which d always has. */
CmParams make_cm_params(const FieldCtx& ctx, FieldElement a, int k);

struct SigmaPair {
    int64_t sigma_j = 0;   // digit-factorial product of j
    int64_t sigma_mjd = 0; // digit-factorial product of -j*d
};

/**
 * The exponents 0 < j < 3^n - 1 with wt(j) + wt(-j*d) = n + 1, the support of
 * the dual formula. Always a union of full cyclotomic cosets, with both
 * digit-factorial products constant on each coset.
 */
struct ExponentSet {
    int n = 0;
    int k = 0;
    std::vector<int64_t> members;       // ascending
    std::vector<int64_t> coset_leaders; // ascending
    std::map<int64_t, SigmaPair> per_coset;
};

/** Exhaustive scan for the weight condition; verifies coset closure. */
ExponentSet enumerate_s(int n, int k);

/** Which of the two solved parameter families applies, k = 2t + 1. */
enum class CaseTag { case_3t1, case_3t2 }; // n = 3t + 1 / n = 3t + 2

/**
 * The three exponents whose cosets exhaust the exponent set in the solved
 * families, written against the half point (3^n - 1)/2.
 */
struct CaseUVW {
    CaseTag case_tag = CaseTag::case_3t1;
    int t = 0;
    int64_t u = 0;
    int64_t v = 0;
    int64_t w = 0;
};

/**
 * Resolve (n, k) to a family and compute u, v, w; their digit-factorial
 * values are checked against the known pattern. NotCovered outside the two
 * families or for t < 2; allow_small_t admits t = 1, whose closed forms hold
 * empirically but carry no guarantee.
 */
CaseUVW case_uvw(int n, int k, bool allow_small_t = false);

/**
 * Dual value at one point: eta(a) times the sum of +-(a / lambda^d)^j over
 * the exponent set, the sign of each coset being its sigma product mod 3.
 * The base is 0 at lambda = 0. The sum provably lands in the prime field;
 * NotInPrimeField flags the upstream bug if it does not.
 */
int universal_dual(const FieldCtx& ctx, const CmParams& params, const ExponentSet& s,
                   FieldElement lambda);

/** One symbolic term sign * a^a_power * lambda^lambda_exponent of a dual. */
struct ClosedFormTerm {
    int sign = 1; // +1 or -1
    int64_t a_power = 0;
    int64_t lambda_exponent = 0;
};

/**
 * The three-term closed form of the dual for the solved families, with the
 * coefficient exponents of a reduced into [0, 3^n - 1). NotCovered applies
 * as in case_uvw.
 */
std::vector<ClosedFormTerm> closed_form_terms(int n, int k, bool allow_small_t = false);

/**
 * The closed form instantiated over the context: a trace polynomial in
 * lambda whose coefficients are +-a^e. When a_log with generator^a_log = a
 * is supplied, each term also records the coefficient's generator exponent.
 */
TracePolynomial closed_form_dual(const FieldCtx& ctx, const CmParams& params,
                                 bool allow_small_t = false,
                                 std::optional<int64_t> a_log = std::nullopt);

struct Regularity {
    bool regular_guaranteed = false;
    UnitClass unit; // quarter of the constant spectral unit; g fixed to 0
};

/**
 * The unit (-1)^(n+1) * eta(a) * i^n multiplying every spectrum entry,
 * as a power of i; the function is regular exactly when it is 1.
 */
Regularity regularity(const FieldCtx& ctx, const CmParams& params);

/**
 * Partition of the exponent set by which weight pattern admits each member:
 * the first joins j and 3^k * j without carries and doubles -j*d with one
 * carry pair, the second is the reverse. Checks the partition against the
 * proven coset unions and the set against C_u + C_v + C_w; LemmaViolation
 * on any mismatch.
 */
struct CaseLemmaReport {
    CaseUVW uvw;
    int64_t s_size = 0;
    std::vector<int64_t> cond1_leaders; // carry-free join, doubling adds 2
    std::vector<int64_t> cond2_leaders; // join adds 2, carry-free doubling
};

CaseLemmaReport verify_case_lemmas(int n, int k);

} // namespace cmbent
