#pragma once

// JSON / CSV / text emitters for every value the CLI prints.
//
// JSON envelope: {"tool", "version", "command", "params", "result"}. Exact
// scalars are strings ("num/den", denominator omitted when 1), polynomials are
// {"coeffs_ascending": [...]}, eigenpairs are {"re", "im", "multiplicity"}.
// CSV has a header row, RFC 4180 quoting and 9 significant digits for reals.

#include "oddquad/polynomial.hpp"
#include "oddquad/spectra.hpp"
#include "oddquad/verifier.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace oddquad {

enum class OutputFormat { text, json, csv };

/// Throws std::invalid_argument on anything other than text, json, csv.
OutputFormat parse_output_format(std::string_view name);

nlohmann::json envelope(const std::string& command, nlohmann::json params, nlohmann::json result);

void to_json(nlohmann::json& j, const ExactPolynomial& f);
void from_json(const nlohmann::json& j, ExactPolynomial& f);
void to_json(nlohmann::json& j, const EigenPair& e);
void from_json(const nlohmann::json& j, EigenPair& e);
void to_json(nlohmann::json& j, const SpectrumReport& r);
void from_json(const nlohmann::json& j, SpectrumReport& r);
void to_json(nlohmann::json& j, const GalkinResult& g);
void from_json(const nlohmann::json& j, GalkinResult& g);
void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// Quotes a field when it contains a comma, quote, CR or LF; quotes are doubled.
std::string csv_field(std::string_view value);
std::string csv_row(const std::vector<std::string>& fields);
/// "%.9g"
std::string format_real(double x);

std::string verification_csv(const VerificationReport& r);
std::string verification_text(const VerificationReport& r);
std::string spectrum_csv(const SpectrumReport& r);
std::string spectrum_text(const SpectrumReport& r);
std::string galkin_csv(const std::vector<GalkinResult>& rows);
std::string galkin_text(const std::vector<GalkinResult>& rows);

}  // namespace oddquad
