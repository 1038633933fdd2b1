// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "oddquad/charpoly.hpp"
#include "oddquad/cli.hpp"
#include "oddquad/ring.hpp"
#include "oddquad/roots.hpp"
#include "oddquad/spectra.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace oddquad;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  /// Wall-clock budget in seconds; 0 for none.
  double limit;
  std::function<Outcome()> body;
};

std::string where(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

ExactPolynomial x_pow_minus_4x(int n) {
  return ExactPolynomial::monomial(1, static_cast<unsigned>(2 * n)) - ExactPolynomial::monomial(4, 1);
}

Outcome golden_matrix() {
  // The worked example for OG(1,3), transcribed row by row.
  const long rows[4][4] = {{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 1, 0}};
  const ExactMatrix a1 = build_a1(make_context(2)).entries;
  Outcome o;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (a1(r, c) != rows[r][c]) o.fail("entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
  return o;
}

Outcome a1_charpoly() {
  Outcome o;
  for (int n = 2; n <= 16; ++n)
    if (charpoly_faddeev(build_a1(make_context(n))) != x_pow_minus_4x(n)) o.fail("n=" + std::to_string(n));
  return o;
}

Outcome closed_form_sweep() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 16; ++n) {
    const auto ctx = make_context(n);
    const auto ops = build_all_operators(ctx);
    for (int p = 1; p <= ctx.dim(); ++p, ++cases)
      if (charpoly_faddeev(ops[static_cast<std::size_t>(p)]) != closed_form_charpoly(ctx, SchubertIndex(ctx, p)))
        o.fail(where(n, p));
  }
  o.note = o.ok ? std::to_string(cases) + " cases" : o.note;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : build_all_operators(make_context(n)))
      if (charpoly_cofactor(a) != charpoly_faddeev(a)) o.fail(where(n, a.p.value()));
  return o;
}

Outcome cayley_hamilton() {
  Outcome o;
  for (int n = 2; n <= 16; ++n) {
    const ExactMatrix a1 = build_a1(make_context(n)).entries;
    if (power(a1, static_cast<unsigned>(2 * n)) != ExactScalar(4) * a1) o.fail("n=" + std::to_string(n));
  }
  return o;
}

Outcome diagonalization() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 20; ++n) {
    const auto r = verify_diagonalization(make_context(n));
    if (!r.residual_diag || !r.max_eigen_residual || !r.pivots) {
      o.fail("missing data at n=" + std::to_string(n));
      continue;
    }
    worst = std::max({worst, *r.residual_diag, *r.max_eigen_residual});
    if (*r.residual_diag > 1e-9 || *r.max_eigen_residual > 1e-9 || !r.pivots->invertible)
      o.fail("n=" + std::to_string(n));
  }
  if (o.ok) {
    std::ostringstream s;
    s << "max residual " << worst;
    o.note = s.str();
  }
  return o;
}

Outcome eigenvalue_identity() {
  Outcome o;
  for (int n = 2; n <= 20; ++n) {
    const auto ctx = make_context(n);
    for (const EigenPair& e : closed_eigenvalues(ctx, SchubertIndex(ctx, 1))) {
      const Complex value = (std::pow(e.value, ctx.dim()) - 2.0) / 2.0;
      const double target = std::abs(e.value) == 0.0 ? -1.0 : 1.0;
      if (std::abs(value - target) > 1e-9) o.fail("n=" + std::to_string(n));
    }
    if (!corollary_32_check(ctx).pass) o.fail("library check at n=" + std::to_string(n));
  }
  return o;
}

Outcome multiplicities() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const auto ops = build_all_operators(ctx);
    for (int p = 0; p <= ctx.dim(); ++p) {
      const ExactPolynomial f = charpoly_faddeev(ops[static_cast<std::size_t>(p)]);
      const std::vector<EigenPair> expected =
          p == 0 ? std::vector<EigenPair>{{1.0, 2 * n}} : closed_eigenvalues(ctx, SchubertIndex(ctx, p));
      if (!eigenpairs_match(expected, eigenpairs_from_polynomial(f), 1e-8)) o.fail(where(n, p));
      if (p >= 1 && p < ctx.dim())
        for (const EigenPair& e : expected)
          if (std::abs(e.value) > 0.0 && e.multiplicity != std::gcd(p, ctx.dim())) o.fail("multiplicity " + where(n, p));
    }
  }
  return o;
}

Outcome fp_dimensions() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const auto ops = build_all_operators(ctx);
    for (int p = 1; p <= ctx.dim(); ++p) {
      const double numeric = max_root_modulus(charpoly_faddeev(ops[static_cast<std::size_t>(p)]));
      if (std::abs(fp_dim(ctx, SchubertIndex(ctx, p)) - numeric) > 1e-8) o.fail(where(n, p));
    }
    if (fp_dim(ctx, SchubertIndex(ctx, ctx.dim())) != 1.0) o.fail("top class at n=" + std::to_string(n));
  }
  const auto two = make_context(2);
  if (std::abs(fp_dim(two, SchubertIndex(two, 1)) - std::cbrt(4.0)) > 1e-12) o.fail("2^{2/3} spot value");
  return o;
}

Outcome simplicity() {
  Outcome o;
  for (int n = 2; n <= 16; ++n) {
    const auto ctx = make_context(n);
    const auto ops = build_all_operators(ctx);
    for (int p = 1; p <= ctx.dim(); ++p) {
      const bool simple = nonzero_part_is_squarefree(charpoly_faddeev(ops[static_cast<std::size_t>(p)])).all_roots_simple();
      const bool expected = p < ctx.dim() && std::gcd(p, ctx.dim()) == 1;
      if (simple != expected) o.fail(where(n, p));
    }
  }
  return o;
}

Outcome galkin() {
  Outcome o;
  double smallest = 1e300;
  const auto start = Clock::now();
  for (int n = 2; n <= 1000000; ++n) {
    const GalkinResult g = galkin_closed_form(n);
    smallest = std::min(smallest, g.margin);
    if (!(g.margin > 0.0) || !g.pass) o.fail("margin at n=" + std::to_string(n));
  }
  const double closed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (closed_seconds >= 5.0) o.fail("closed-form sweep took " + std::to_string(closed_seconds) + " s");

  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const ExactMatrix c1 = ExactScalar(ctx.dim()) * build_a1(ctx).entries;
    const double numeric = max_root_modulus(charpoly_faddeev(c1));
    if (std::abs(numeric - galkin_closed_form(n).fpdim_c1) > 1e-8) o.fail("cross-check at n=" + std::to_string(n));
    const GalkinResult g = galkin_check(ctx);
    if (!g.cross_check || !g.cross_check_ok) o.fail("library cross-check at n=" + std::to_string(n));
  }
  if (o.ok) {
    std::ostringstream s;
    s << "min margin " << smallest << ", closed-form sweep " << closed_seconds << " s";
    o.note = s.str();
  }
  return o;
}

Outcome ring_properties() {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    const auto ops = build_all_operators(make_context(n));
    for (const auto& a : ops)
      for (const auto& b : ops)
        if (a.p.value() < b.p.value() && a.entries * b.entries != b.entries * a.entries)
          o.fail("commutativity n=" + std::to_string(n));
  }
  for (int n = 2; n <= 12; ++n) {
    const auto ctx = make_context(n);
    const int top = ctx.dim();
    for (const auto& a : build_all_operators(ctx)) {
      const int p = a.p.value();
      if (a.entries.column(0) != ClassVector::basis(ctx, a.p).coeffs) o.fail("unit column " + where(n, p));
      if (p < 1 || p > top - 1) continue;
      for (std::size_t j = 0; j < a.entries.rows(); ++j)
        for (std::size_t i = 0; i < a.entries.cols(); ++i)
          if (a.entries(j, i) != 0 && (static_cast<int>(j) - static_cast<int>(i) - p + 4 * top) % top != 0)
            o.fail("grading " + where(n, p));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const int size = ctx.basis_size();
    auto e = [&ctx](int k) { return ClassVector::basis(ctx, SchubertIndex(ctx, k)); };
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        const ClassVector ab = star_multiply(ctx, e(a), e(b));
        for (int c = 0; c < size; ++c)
          if (star_multiply(ctx, ab, e(c)) != star_multiply(ctx, e(a), star_multiply(ctx, e(b), e(c))))
            o.fail("associativity n=" + std::to_string(n));
      }
  }
  return o;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string process_output(const std::string& command) {
  std::string text;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) text.append(buffer, got);
  pclose(pipe);
  return text;
}

Outcome determinism() {
  Outcome o;
  for (const char* format : {"json", "csv", "text"}) {
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "1", "2", "4", "8"}) {
      int code = -1;
      outputs.push_back(cli_output({"verify", "--n-min", "2", "--n-max", "8", "--jobs", jobs, "--format", format}, code));
      if (code != kExitOk) o.fail(std::string("exit code with --jobs ") + jobs);
    }
    for (const auto& s : outputs)
      if (s != outputs.front()) o.fail(std::string("in-process output differs (") + format + ")");
  }
#ifdef ODDQUAD_BINARY
  const std::string bin = ODDQUAD_BINARY;
  const std::string base = bin + " verify --n-min 2 --n-max 6 --format json --jobs ";
  const std::string first = process_output(base + "1");
  if (first.empty() || process_output(base + "1") != first || process_output(base + "3") != first)
    o.fail("process output differs");
#endif
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden matrix A(tau_1) for n = 2", 0.001, golden_matrix},
      {2, "charpoly of A(tau_1) is x^{2n} - 4x for n in [2,16]", 30, a1_charpoly},
      {3, "Faddeev charpoly equals closed form for n in [2,16], all p >= 1", 120, closed_form_sweep},
      {4, "cofactor charpoly equals Faddeev charpoly for n in [2,4], all p", 30, oracle_equivalence},
      {5, "A(tau_1)^{2n} = 4 A(tau_1) for n <= 16", 0, cayley_hamilton},
      {6, "diagonalization residuals <= 1e-9 and P nonsingular for n <= 20", 0, diagonalization},
      {7, "(l^{2n-1} - 2)/2 is -1 at 0 and +1 elsewhere for n <= 20", 0, eigenvalue_identity},
      {8, "eigenpairs match exact roots within 1e-8, multiplicity gcd(p,2n-1), n <= 12", 0, multiplicities},
      {9, "FP dimension equals max root modulus within 1e-8 for n <= 12", 0, fp_dimensions},
      {10, "squarefree simplicity equals gcd(p,2n-1) = 1 for n <= 16", 0, simplicity},
      {11, "Galkin margin positive for n in [2,10^6], cross-checked for n <= 12", 0, galkin},
      {12, "commutativity, unit column, grading, associativity", 0, ring_properties},
      {13, "verify output byte-identical across runs and --jobs", 0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && seconds >= c.limit) o.fail("over time budget of " + std::to_string(c.limit) + " s");
    if (!o.ok) ++failures;

    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << (c.id < 10 ? "0" : "") << c.id << "  " << c.title << "  ("
              << timing << (o.note.empty() ? "" : "; " + o.note) << ")\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
