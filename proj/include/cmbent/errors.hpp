#pragma once

#include <stdexcept>
#include <string>

namespace cmbent {

// Stable error codes for every failure mode the library can report.
enum class errc {
    reject_degree,          // modulus length wrong or leading coefficient zero
    reject_reducible,       // modulus fails the irreducibility test
    zero_to_negative_power, // inverse or negative power of zero requested
    not_in_subfield,        // element outside the requested subfield
    eta_of_zero,            // quadratic character of zero
    not_representable,      // i^quarter * 3^(n/2) lies outside Z[w] for this parity
    norm_mismatch,          // classified value does not have norm 3^n
    no_match,               // norm-3^n value matches no unit class (upstream bug)
    half_point,             // doubling criteria degenerate at j = (3^n-1)/2
    zero_input,             // doubling criteria undefined at j = 0
    odd_input,              // halving requested on an odd value
    bad_parameters,         // (n, k) or a outside the documented domain
    too_large,              // naive transform requested beyond n = 6
    singular_gram,          // trace bilinear form degenerate (modulus bug)
    not_covered,            // (n, k) outside the two closed-form families
    lemma_violation,        // an internally proven identity failed (library bug)
    not_in_prime_field,     // dual-formula sum landed outside F_3 (library bug)
    malformed_term,         // trace-term coefficient not in its coset subfield
    size_mismatch,          // table length does not cover the domain
    y_zero,                 // character inversion requested at y = 0
    io_error,               // file could not be read or parsed
};

const char* errc_name(errc code);

/** Exception carrying a stable error code alongside the message. */
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

} // namespace cmbent
