#include "cmbent/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace cmbent {

namespace {

json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
    return v.get_str();
}

json trits_json(const FieldCtx& ctx, FieldElement u) {
    json arr = json::array();
    for (int i = 0; i < ctx.n(); ++i) arr.push_back(u.trit(i));
    return arr;
}

} // namespace

json eisenstein_json(const Eisenstein& e) {
    return {{"a", mpz_json(e.a())}, {"b", mpz_json(e.b())}};
}

json unit_class_json(const UnitClass& u) {
    return {{"quarter", u.quarter}, {"g", u.g}};
}

json trace_poly_json(const FieldCtx& ctx, const TracePolynomial& p) {
    json arr = json::array();
    for (const TraceTerm& t : p.terms) {
        json term;
        term["exponent"] = t.exponent;
        if (t.coeff_power)
            term["coeff_power"] = *t.coeff_power;
        else
            term["coeff_trits"] = trits_json(ctx, t.coeff);
        arr.push_back(term);
    }
    if (p.constant != 0) {
        json term;
        term["exponent"] = ctx.q() - 1;
        json trits = json::array();
        trits.push_back(p.constant);
        for (int i = 1; i < ctx.n(); ++i) trits.push_back(0);
        term["coeff_trits"] = trits;
        arr.push_back(term);
    }
    return arr;
}

json bent_report_json(const BentReport& r) {
    json j;
    j["is_bent"] = r.is_bent;
    j["weakly_regular"] = r.weakly_regular;
    j["regular"] = r.regular;
    j["unit"] = r.unit ? unit_class_json(*r.unit) : json(nullptr);
    if (r.dual) {
        json dual = json::array();
        for (uint8_t v : r.dual->values) dual.push_back(static_cast<int>(v));
        j["dual"] = dual;
    } else {
        j["dual"] = nullptr;
    }
    return j;
}

json spectrum_json(const WalshSpectrum& s) {
    json arr = json::array();
    for (size_t i = 0; i < s.entries.size(); ++i) {
        arr.push_back({{"lambda_index", i},
                       {"a", mpz_json(s.entries[i].a())},
                       {"b", mpz_json(s.entries[i].b())}});
    }
    return arr;
}

std::string spectrum_csv(const WalshSpectrum& s) {
    std::string out = "lambda_index,a,b\n";
    for (size_t i = 0; i < s.entries.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += s.entries[i].a().get_str();
        out += ',';
        out += s.entries[i].b().get_str();
        out += '\n';
    }
    return out;
}

json gauss_report_json(const GaussReport& r) {
    json ids;
    for (const auto& [name, dev] : r.identities) ids[name] = dev;
    return {{"q", r.q}, {"max_abs_error", r.max_abs_error}, {"identities", ids}};
}

json exponent_set_json(const ExponentSet& s) {
    json per;
    for (const auto& [leader, sp] : s.per_coset)
        per[std::to_string(leader)] = {{"sigma_j", sp.sigma_j}, {"sigma_mjd", sp.sigma_mjd}};
    return {{"n", s.n},
            {"k", s.k},
            {"S_size", s.members.size()},
            {"leaders", s.coset_leaders},
            {"members", s.members},
            {"per_coset", per}};
}

json case_lemma_report_json(const CaseLemmaReport& r) {
    return {{"case", r.uvw.case_tag == CaseTag::case_3t1 ? "3t+1" : "3t+2"},
            {"t", r.uvw.t},
            {"u", r.uvw.u},
            {"v", r.uvw.v},
            {"w", r.uvw.w},
            {"S_size", r.s_size},
            {"cond1_leaders", r.cond1_leaders},
            {"cond2_leaders", r.cond2_leaders}};
}

json closed_form_terms_json(const std::vector<ClosedFormTerm>& terms) {
    json arr = json::array();
    for (const ClosedFormTerm& t : terms)
        arr.push_back({{"sign", t.sign}, {"a_power", t.a_power}, {"lambda_exponent", t.lambda_exponent}});
    return arr;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::map<int, std::vector<int>> parse_modulus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open modulus file: " + path);
    std::map<int, std::vector<int>> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue; // blank
        if (head.empty() || head.back() != ':')
            fail(errc::io_error, "modulus file line " + std::to_string(lineno) +
                                     ": expected \"n:\" prefix");
        int n = 0;
        try {
            n = std::stoi(head.substr(0, head.size() - 1));
        } catch (const std::exception&) {
            fail(errc::io_error, "modulus file line " + std::to_string(lineno) + ": bad degree");
        }
        std::vector<int> coeffs;
        int c;
        while (ls >> c) coeffs.push_back(c);
        if (!ls.eof())
            fail(errc::io_error, "modulus file line " + std::to_string(lineno) +
                                     ": non-integer coefficient");
        if (n < 1 || coeffs.empty())
            fail(errc::io_error, "modulus file line " + std::to_string(lineno) +
                                     ": missing degree or coefficients");
        table[n] = std::move(coeffs);
    }
    return table;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open output file: " + path);
    out << content;
    if (!out.good()) fail(errc::io_error, "write failed: " + path);
}

} // namespace cmbent
