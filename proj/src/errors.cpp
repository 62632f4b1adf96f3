#include "cmbent/errors.hpp"

namespace cmbent {

const char* errc_name(errc code) {
    switch (code) {
    case errc::reject_degree: return "RejectDegree";
    case errc::reject_reducible: return "RejectReducible";
    case errc::zero_to_negative_power: return "ZeroToNegativePower";
    case errc::not_in_subfield: return "NotInSubfield";
    case errc::eta_of_zero: return "EtaOfZero";
    case errc::not_representable: return "NotRepresentable";
    case errc::norm_mismatch: return "NormMismatch";
    case errc::no_match: return "NoMatch";
    case errc::half_point: return "HalfPoint";
    case errc::zero_input: return "ZeroInput";
    case errc::odd_input: return "OddInput";
    case errc::bad_parameters: return "BadParameters";
    case errc::too_large: return "TooLarge";
    case errc::singular_gram: return "SingularGram";
    case errc::not_covered: return "NotCovered";
    case errc::lemma_violation: return "LemmaViolation";
    case errc::not_in_prime_field: return "NotInPrimeField";
    case errc::malformed_term: return "MalformedTerm";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::y_zero: return "YZero";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

error::error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace cmbent
