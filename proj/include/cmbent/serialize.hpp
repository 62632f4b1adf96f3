#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmbent/charsum.hpp"
#include "cmbent/cmdual.hpp"
#include "cmbent/cosets.hpp"
#include "cmbent/walsh.hpp"

namespace cmbent {

// nlohmann::json keeps keys sorted, which the deterministic-output contract
// relies on; every emitter here goes through it.
using json = nlohmann::json;

json eisenstein_json(const Eisenstein& e);
json unit_class_json(const UnitClass& u);

/**
 * Term list rendering: each entry carries "exponent" plus either
 * "coeff_power" (generator exponent, when recorded) or "coeff_trits".
 * A nonzero constant appears as a final x^(q-1) term.
 */
json trace_poly_json(const FieldCtx& ctx, const TracePolynomial& p);

json bent_report_json(const BentReport& r);

/** Rows {"lambda_index", "a", "b"}, same columns as the CSV form. */
json spectrum_json(const WalshSpectrum& s);
std::string spectrum_csv(const WalshSpectrum& s);

json gauss_report_json(const GaussReport& r);
json exponent_set_json(const ExponentSet& s);
json case_lemma_report_json(const CaseLemmaReport& r);
json closed_form_terms_json(const std::vector<ClosedFormTerm>& terms);

/** Stable text form: two-space indent, sorted keys, trailing newline. */
std::string dump_json(const json& j);

/**
 * Modulus override table: lines "n: c0 c1 ... cn", constant term first;
 * blank lines and # comments ignored. IoError on unreadable or malformed
 * input; coefficient validity is left to context construction.
 */
std::map<int, std::vector<int>> parse_modulus_file(const std::string& path);

/** Writes to the path, or to stdout when it is empty or "-". */
void write_output(const std::string& path, const std::string& content);

} // namespace cmbent
