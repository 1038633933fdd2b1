#include "oddquad/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace oddquad {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

json envelope(const std::string& command, json params, json result) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"params", std::move(params)},
              {"result", std::move(result)}};
}

void to_json(json& j, const ExactPolynomial& f) { j = json{{"coeffs_ascending", to_coefficient_strings(f)}}; }

void from_json(const json& j, ExactPolynomial& f) {
  f = from_coefficient_strings(j.at("coeffs_ascending").get<std::vector<std::string>>());
}

void to_json(json& j, const EigenPair& e) {
  j = json{{"re", e.value.real()}, {"im", e.value.imag()}, {"multiplicity", e.multiplicity}};
}

void from_json(const json& j, EigenPair& e) {
  e.value = Complex(j.at("re").get<double>(), j.at("im").get<double>());
  e.multiplicity = j.at("multiplicity").get<int>();
}

void to_json(json& j, const SpectrumReport& r) {
  j = json{{"n", r.n}, {"p", r.p}, {"eigenpairs", r.eigenpairs}, {"fp_dim", r.fp_dim}, {"simple", r.simple}};
  if (r.residual_diag) j["residual_diag"] = *r.residual_diag;
  if (r.max_eigen_residual) j["max_eigen_residual"] = *r.max_eigen_residual;
  if (r.pivots)
    j["pivots"] = json{{"min", r.pivots->min_pivot}, {"max", r.pivots->max_pivot}, {"invertible", r.pivots->invertible}};
}

void from_json(const json& j, SpectrumReport& r) {
  r = SpectrumReport{};
  r.n = j.at("n").get<int>();
  r.p = j.at("p").get<int>();
  r.eigenpairs = j.at("eigenpairs").get<std::vector<EigenPair>>();
  r.fp_dim = j.at("fp_dim").get<double>();
  r.simple = j.at("simple").get<bool>();
  if (j.contains("residual_diag")) r.residual_diag = j.at("residual_diag").get<double>();
  if (j.contains("max_eigen_residual")) r.max_eigen_residual = j.at("max_eigen_residual").get<double>();
  if (j.contains("pivots")) {
    const json& pv = j.at("pivots");
    r.pivots = PivotTest{pv.at("min").get<double>(), pv.at("max").get<double>(), pv.at("invertible").get<bool>()};
  }
}

void to_json(json& j, const GalkinResult& g) {
  j = json{{"n", g.n}, {"fpdim_c1", g.fpdim_c1}, {"bound", g.bound}, {"margin", g.margin}, {"pass", g.pass}};
  if (g.cross_check) {
    j["cross_check"] = *g.cross_check;
    j["cross_check_ok"] = g.cross_check_ok;
  }
}

void from_json(const json& j, GalkinResult& g) {
  g = GalkinResult{};
  g.n = j.at("n").get<int>();
  g.fpdim_c1 = j.at("fpdim_c1").get<double>();
  g.bound = j.at("bound").get<int>();
  g.margin = j.at("margin").get<double>();
  g.pass = j.at("pass").get<bool>();
  if (j.contains("cross_check")) {
    g.cross_check = j.at("cross_check").get<double>();
    g.cross_check_ok = j.at("cross_check_ok").get<bool>();
  }
}

void to_json(json& j, const CheckResult& r) {
  j = json{{"check_id", r.check_id},
           {"n", r.n},
           {"p", r.p},
           {"status", r.status == CheckStatus::pass ? "pass" : "fail"},
           {"detail", r.detail}};
  if (r.witness) j["witness"] = *r.witness;
}

void from_json(const json& j, CheckResult& r) {
  r = CheckResult{};
  r.check_id = j.at("check_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.p = j.at("p").get<int>();
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("bad check status: " + status);
  r.status = status == "pass" ? CheckStatus::pass : CheckStatus::fail;
  r.detail = j.at("detail").get<std::string>();
  if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  json summary = json::object();
  for (const auto& [id, counts] : r.summary) summary[id] = json{{"pass", counts.pass}, {"fail", counts.fail}};
  j = json{{"tool_version", r.tool_version},
           {"n_range", {r.n_min, r.n_max}},
           {"results", r.results},
           {"summary", std::move(summary)}};
}

void from_json(const json& j, VerificationReport& r) {
  r = VerificationReport{};
  r.tool_version = j.at("tool_version").get<std::string>();
  r.n_min = j.at("n_range").at(0).get<int>();
  r.n_max = j.at("n_range").at(1).get<int>();
  r.results = j.at("results").get<std::vector<CheckResult>>();
  for (const auto& [id, counts] : j.at("summary").items())
    r.summary[id] = CheckCounts{counts.at("pass").get<int>(), counts.at("fail").get<int>()};
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

namespace {

const char* status_name(CheckStatus s) { return s == CheckStatus::pass ? "pass" : "fail"; }
const char* bool_name(bool b) { return b ? "true" : "false"; }

std::string complex_text(Complex z) {
  std::string out = format_real(z.real());
  const double im = z.imag();
  out += im < 0 ? " - " : " + ";
  out += format_real(std::abs(im)) + "i";
  return out;
}

}  // namespace

std::string verification_csv(const VerificationReport& r) {
  std::string out = csv_row({"check_id", "n", "p", "status", "detail"});
  for (const auto& res : r.results)
    out += csv_row({res.check_id, std::to_string(res.n), std::to_string(res.p), status_name(res.status), res.detail});
  return out;
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& res : r.results) {
    os << (res.status == CheckStatus::pass ? "PASS " : "FAIL ") << res.check_id << " n=" << res.n;
    if (res.p >= 0) os << " p=" << res.p;
    os << "  " << res.detail << '\n';
  }
  os << "summary (n in [" << r.n_min << ", " << r.n_max << "]):\n";
  for (const auto& [id, counts] : r.summary)
    os << "  " << id << ": " << counts.pass << " pass, " << counts.fail << " fail\n";
  os << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
  return os.str();
}

std::string spectrum_csv(const SpectrumReport& r) {
  std::string out = csv_row({"n", "p", "re", "im", "multiplicity", "fp_dim", "simple"});
  for (const auto& e : r.eigenpairs)
    out += csv_row({std::to_string(r.n), std::to_string(r.p), format_real(e.value.real()), format_real(e.value.imag()),
                    std::to_string(e.multiplicity), format_real(r.fp_dim), bool_name(r.simple)});
  return out;
}

std::string spectrum_text(const SpectrumReport& r) {
  std::ostringstream os;
  os << "spectrum of A(tau_" << r.p << ") for n=" << r.n << '\n';
  for (const auto& e : r.eigenpairs) os << "  " << complex_text(e.value) << "  x" << e.multiplicity << '\n';
  os << "fp_dim: " << format_real(r.fp_dim) << '\n';
  os << "simple: " << bool_name(r.simple) << '\n';
  if (r.residual_diag) os << "diagonalization residual: " << format_real(*r.residual_diag) << '\n';
  return os.str();
}

std::string galkin_csv(const std::vector<GalkinResult>& rows) {
  std::string out = csv_row({"n", "fpdim_c1", "bound", "margin", "pass", "cross_check"});
  for (const auto& g : rows)
    out += csv_row({std::to_string(g.n), format_real(g.fpdim_c1), std::to_string(g.bound), format_real(g.margin),
                    g.pass ? "pass" : "fail", g.cross_check ? format_real(*g.cross_check) : ""});
  return out;
}

std::string galkin_text(const std::vector<GalkinResult>& rows) {
  std::ostringstream os;
  os << "n  fpdim_c1  bound  margin  pass\n";
  for (const auto& g : rows) {
    os << g.n << "  " << format_real(g.fpdim_c1) << "  " << g.bound << "  " << format_real(g.margin) << "  "
       << (g.pass && g.cross_check_ok ? "pass" : "fail");
    if (g.cross_check) os << "  (exact cross-check " << format_real(*g.cross_check) << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace oddquad
