#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cmbent/errors.hpp"

namespace cmbent {

inline constexpr int kMaxDegree = 13;

/** Element of F_{3^n}: up to 13 base-3 coefficients packed two bits apiece. */
class FieldElement {
public:
    FieldElement() = default;

    int trit(int i) const { return static_cast<int>((bits_ >> (2 * i)) & 3u); }
    void set_trit(int i, int v) {
        bits_ = (bits_ & ~(3u << (2 * i))) | (static_cast<uint32_t>(v) << (2 * i));
    }
    bool is_zero() const { return bits_ == 0; }
    uint32_t raw() const { return bits_; }
    static FieldElement from_raw(uint32_t bits) {
        FieldElement e;
        e.bits_ = bits;
        return e;
    }
    bool operator==(const FieldElement&) const = default;

private:
    uint32_t bits_ = 0;
};

/**
 * Validated arithmetic context for F_{3^n} = F_3[x]/(modulus), 1 <= n <= 13.
 * Construction normalizes the modulus to monic form, proves it irreducible,
 * locates the smallest primitive element by element index, and caches the
 * trace form. Immutable afterwards and safe to share across threads.
 */
class FieldCtx {
public:
    /** modulus holds n+1 trits, constant term first. */
    FieldCtx(int n, std::span<const int> modulus);

    /** Context over the shipped modulus table (see builtin_modulus). */
    static FieldCtx builtin(int n);

    /**
     * Shipped modulus for degree n: the lexicographically smallest monic
     * primitive polynomial, coefficients compared from the constant term up.
     * Primitivity makes alpha itself the generator, so exponent-form output
     * is reproducible across runs and platforms.
     */
    static std::vector<int> builtin_modulus(int n);

    int n() const { return n_; }
    int64_t q() const { return q_; }
    int64_t order() const { return q_ - 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return element(1); }
    /** Residue class of x. */
    FieldElement alpha() const { return alpha_; }
    /** Element of given lexicographic rank: coefficient i carries weight 3^i. */
    FieldElement element(int64_t index) const;
    int64_t index_of(FieldElement u) const;
    FieldElement from_trits(std::span<const int> trits) const;

    FieldElement add(FieldElement u, FieldElement v) const;
    FieldElement sub(FieldElement u, FieldElement v) const;
    FieldElement neg(FieldElement u) const;
    FieldElement mul(FieldElement u, FieldElement v) const;
    /** Multiplicative inverse; ZeroToNegativePower on zero. */
    FieldElement inverse(FieldElement u) const;
    /** u^e with any int64 e; negative e inverts first (u nonzero). */
    FieldElement pow(FieldElement u, int64_t e) const;

    /** Absolute trace to F_3, as a trit. */
    int trace(FieldElement u) const;
    /**
     * Trace of the subfield F_{3^m} down to F_3, for u inside that subfield
     * (checked via u^(3^m) = u), returned as a constant field element.
     */
    FieldElement subfield_trace(FieldElement u, int m) const;
    /** Quadratic character: +1 for nonzero squares, -1 otherwise. */
    int eta(FieldElement u) const;

    /** Smallest primitive element by index; alpha for the builtin moduli. */
    FieldElement generator() const { return generator_; }
    /** trace(alpha^i) for i < n; trace is the dot product with these. */
    const std::array<uint8_t, kMaxDegree>& trace_basis() const { return trace_basis_; }
    /** Gram matrix of the trace form: gram[i][j] = trace(alpha^i * alpha^j). */
    const std::array<std::array<uint8_t, kMaxDegree>, kMaxDegree>& gram() const { return gram_; }
    /** Whether the Gram matrix is invertible mod 3 (always, for a field). */
    bool gram_invertible() const;

private:
    int n_ = 0;
    int64_t q_ = 0;
    std::vector<int> modulus_; // monic, constant term first
    FieldElement alpha_;
    FieldElement generator_;
    std::array<uint8_t, kMaxDegree> trace_basis_{};
    std::array<std::array<uint8_t, kMaxDegree>, kMaxDegree> gram_{};
};

/**
 * Dense powers g^0 .. g^(q-2) of the context generator plus the inverse
 * discrete-log table, for functions evaluated by walking exponents instead
 * of repeated powering. Costs O(q) memory; build once per heavy run.
 */
class GeneratorTable {
public:
    explicit GeneratorTable(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    /** g^e for any int64 e, reduced mod q-1. */
    FieldElement power(int64_t e) const;
    /** Discrete log base g of a nonzero element. */
    int64_t log(FieldElement u) const;

private:
    const FieldCtx* ctx_;
    std::vector<uint32_t> pow_;
    std::vector<int32_t> log_;
};

} // namespace cmbent
