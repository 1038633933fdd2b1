#include "oddquad/cli.hpp"

#include "oddquad/charpoly.hpp"
#include "oddquad/report.hpp"
#include "oddquad/ring.hpp"
#include "oddquad/spectra.hpp"
#include "oddquad/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace oddquad {

namespace {

using nlohmann::json;

// Thrown for argument problems detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
};

struct Outcome {
  std::string payload;
  int code = kExitOk;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

QuadricContext context_or_usage(int n) {
  try {
    return QuadricContext(n);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

SchubertIndex index_or_usage(const QuadricContext& ctx, int p) {
  try {
    return SchubertIndex(ctx, p);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

Outcome cmd_charpoly(int n, int p, OutputFormat format) {
  const QuadricContext ctx = context_or_usage(n);
  const SchubertIndex index = index_or_usage(ctx, p);
  const ExactPolynomial computed = charpoly_faddeev(build_ap(ctx, index));
  std::optional<ExactPolynomial> closed;
  if (p >= 1) closed = closed_form_charpoly(ctx, index);
  const bool match = !closed || *closed == computed;

  Outcome outcome;
  outcome.code = match ? kExitOk : kExitMismatch;
  switch (format) {
    case OutputFormat::text:
      outcome.payload = to_text(computed);
      if (closed)
        outcome.payload += " | closed form: " + to_text(*closed) + " | match: " + (match ? "true" : "false");
      outcome.payload += "\n";
      break;
    case OutputFormat::json: {
      json result{{"n", n}, {"p", p}, {"charpoly", computed}};
      result["closed_form"] = closed ? json(*closed) : json(nullptr);
      result["match"] = closed ? json(match) : json(nullptr);
      outcome.payload = dump(envelope("charpoly", json{{"n", n}, {"p", p}}, std::move(result)));
      break;
    }
    case OutputFormat::csv: {
      outcome.payload = csv_row({"n", "p", "degree", "computed", "closed_form", "match"});
      for (int k = 0; k <= computed.degree(); ++k)
        outcome.payload += csv_row({std::to_string(n), std::to_string(p), std::to_string(k),
                                    to_string(computed.coefficient(k)),
                                    closed ? to_string(closed->coefficient(k)) : "",
                                    closed ? (match ? "true" : "false") : ""});
      break;
    }
  }
  return outcome;
}

Outcome cmd_spectrum(int n, int p, OutputFormat format) {
  const QuadricContext ctx = context_or_usage(n);
  const SchubertIndex index = index_or_usage(ctx, p);
  if (p == 0) throw UsageError("spectrum needs 1 <= p <= 2n-1");
  const SpectrumReport report = p == 1 ? verify_diagonalization(ctx) : spectrum_report(ctx, index);

  Outcome outcome;
  switch (format) {
    case OutputFormat::text: outcome.payload = spectrum_text(report); break;
    case OutputFormat::json: outcome.payload = dump(envelope("spectrum", json{{"n", n}, {"p", p}}, report)); break;
    case OutputFormat::csv: outcome.payload = spectrum_csv(report); break;
  }
  return outcome;
}

Outcome cmd_fpdim(int n, int p, OutputFormat format) {
  const QuadricContext ctx = context_or_usage(n);
  const SchubertIndex index = index_or_usage(ctx, p);
  if (p == 0) throw UsageError("fpdim needs 1 <= p <= 2n-1");
  const double closed = fp_dim(ctx, index);
  const double numeric = max_root_modulus(charpoly_faddeev(build_ap(ctx, index)));
  const bool match = std::abs(closed - numeric) <= 1e-8;

  Outcome outcome;
  outcome.code = match ? kExitOk : kExitMismatch;
  switch (format) {
    case OutputFormat::text:
      outcome.payload = "fp_dim: " + format_real(closed) + " | max root modulus: " + format_real(numeric) +
                        " | match: " + (match ? "true" : "false") + "\n";
      break;
    case OutputFormat::json:
      outcome.payload = dump(envelope("fpdim", json{{"n", n}, {"p", p}},
                                      json{{"n", n}, {"p", p}, {"fp_dim", closed}, {"max_root_modulus", numeric},
                                           {"match", match}}));
      break;
    case OutputFormat::csv:
      outcome.payload = csv_row({"n", "p", "fp_dim", "max_root_modulus", "match"}) +
                        csv_row({std::to_string(n), std::to_string(p), format_real(closed), format_real(numeric),
                                 match ? "true" : "false"});
      break;
  }
  return outcome;
}

void require_range(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min)
    throw UsageError("need 2 <= n-min <= n-max, got [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
}

Outcome cmd_galkin(int n_min, int n_max, OutputFormat format) {
  require_range(n_min, n_max);
  std::vector<GalkinResult> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  bool all_pass = true;
  for (int n = n_min; n <= n_max; ++n) {
    GalkinResult g = n <= kGalkinCrossCheckMaxN ? galkin_check(QuadricContext(n)) : galkin_closed_form(n);
    all_pass = all_pass && g.pass && g.cross_check_ok;
    rows.push_back(std::move(g));
  }

  Outcome outcome;
  outcome.code = all_pass ? kExitOk : kExitMismatch;
  switch (format) {
    case OutputFormat::text: outcome.payload = galkin_text(rows); break;
    case OutputFormat::json:
      outcome.payload = dump(envelope("galkin", json{{"n_min", n_min}, {"n_max", n_max}},
                                      json{{"rows", rows}, {"all_pass", all_pass}}));
      break;
    case OutputFormat::csv: outcome.payload = galkin_csv(rows); break;
  }
  return outcome;
}

std::set<std::string> split_checks(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.insert(item);
  }
  return out;
}

Outcome cmd_verify(int n_min, int n_max, const std::string& checks, unsigned jobs, ChevalleyConvention convention,
                   OutputFormat format) {
  require_range(n_min, n_max);
  const std::set<std::string> selected = split_checks(checks);
  VerificationReport report;
  try {
    report = run_suite(n_min, n_max, selected, SuiteOptions{jobs, convention});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  json check_list = json::array();
  for (const auto& id : selected) check_list.push_back(id);
  Outcome outcome;
  outcome.code = report.all_pass() ? kExitOk : kExitMismatch;
  switch (format) {
    case OutputFormat::text: outcome.payload = verification_text(report); break;
    case OutputFormat::json:
      outcome.payload =
          dump(envelope("verify", json{{"n_min", n_min}, {"n_max", n_max}, {"checks", check_list}}, report));
      break;
    case OutputFormat::csv: outcome.payload = verification_csv(report); break;
  }
  return outcome;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral computations in the quantum cohomology of odd quadrics", "oddquad"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  int n = 0, p = 0, n_min = 2, n_max = 2;
  std::string checks;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  CommonOptions common;

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of A(tau_p)");
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form eigenvalues, FP dimension and simplicity of A(tau_p)");
  auto* fpdim = app.add_subcommand("fpdim", "FP dimension of tau_p, closed form against the exact polynomial");
  for (auto* cmd : {charpoly, spectrum, fpdim}) {
    cmd->add_option("-n,--n", n, "Quadric parameter n >= 2")->required();
    cmd->add_option("-p,--p", p, "Schubert index 0 <= p <= 2n-1")->required();
    add_common(cmd, common);
  }

  auto* galkin = app.add_subcommand("galkin", "Galkin lower bound margins for a range of n");
  galkin->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
  galkin->add_option("--n-max", n_max, "Largest n")->required();
  add_common(galkin, common);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--n-min", n_min, "Smallest n")->required();
  verify->add_option("--n-max", n_max, "Largest n")->required();
  verify->add_option("--checks", checks, "Comma-separated check ids (default: all)");
  verify->add_option("--jobs", jobs, "Worker threads (default: number of processors)");
  // Hidden: swaps in the mutated Chevalley rule so the failure path can be exercised end to end.
  std::string convention = "corrected";
  verify->add_option("--convention", convention)->check(CLI::IsMember({"corrected", "literal"}))->group("");
  add_common(verify, common);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << ' ' << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Outcome outcome;
  try {
    const OutputFormat format = parse_output_format(common.format);
    if (charpoly->parsed())
      outcome = cmd_charpoly(n, p, format);
    else if (spectrum->parsed())
      outcome = cmd_spectrum(n, p, format);
    else if (fpdim->parsed())
      outcome = cmd_fpdim(n, p, format);
    else if (galkin->parsed())
      outcome = cmd_galkin(n_min, n_max, format);
    else
      outcome = cmd_verify(n_min, n_max, checks, jobs,
                           convention == "literal" ? ChevalleyConvention::literal : ChevalleyConvention::corrected,
                           format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }

  if (common.out_path.empty()) {
    out << outcome.payload;
  } else {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << common.out_path << " for writing\n";
      return kExitUsage;
    }
    file << outcome.payload;
  }
  return outcome.code;
}

}  // namespace oddquad
