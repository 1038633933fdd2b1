#include "oddquad/verifier.hpp"

#include "oddquad/charpoly.hpp"
#include "oddquad/polynomial.hpp"
#include "oddquad/spectra.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace oddquad {

using nlohmann::json;

namespace {

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_json(const ExactPolynomial& f) { return json{{"coeffs_ascending", to_coefficient_strings(f)}}; }

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct Task {
  std::string check_id;
  int n;
  int p;
};

class CheckContext {
 public:
  CheckContext(const Task& task, ChevalleyConvention convention)
      : ctx_(task.n), task_(task), convention_(convention) {}

  const QuadricContext& ctx() const { return ctx_; }
  SchubertIndex index() const { return SchubertIndex(ctx_, task_.p); }
  ChevalleyConvention convention() const { return convention_; }

  CheckResult pass(std::string detail) const {
    return CheckResult{task_.check_id, task_.n, task_.p, CheckStatus::pass, std::move(detail), std::nullopt};
  }
  CheckResult fail(std::string detail, const json& witness) const {
    return CheckResult{task_.check_id, task_.n, task_.p, CheckStatus::fail, std::move(detail),
                       cap_witness(witness.dump())};
  }
  CheckResult verdict(bool ok, std::string detail, const std::function<json()>& witness) const {
    return ok ? pass(std::move(detail)) : fail(std::move(detail), witness());
  }

 private:
  QuadricContext ctx_;
  Task task_;
  ChevalleyConvention convention_;
};

CheckResult check_charpoly_main(const CheckContext& c) {
  const ExactPolynomial computed = charpoly_faddeev(build_ap(c.ctx(), c.index(), c.convention()));
  const ExactPolynomial expected = closed_form_charpoly(c.ctx(), c.index());
  return c.verdict(computed == expected, "charpoly " + to_text(computed, "x"), [&] {
    return json{{"computed", poly_json(computed)}, {"closed_form", poly_json(expected)}};
  });
}

CheckResult check_charpoly_oracle(const CheckContext& c) {
  const ExactMatrix built = build_ap(c.ctx(), c.index(), c.convention()).entries;
  const ExactMatrix rebuilt = operator_from_unit_column(c.ctx(), c.index(), c.convention());
  const ExactPolynomial faddeev = charpoly_faddeev(built);
  const ExactPolynomial cofactor = charpoly_cofactor(rebuilt);
  return c.verdict(faddeev == cofactor, "faddeev-leverrier vs cofactor expansion", [&] {
    return json{{"faddeev", poly_json(faddeev)},
                {"cofactor", poly_json(cofactor)},
                {"built_operator", matrix_json(built)},
                {"oracle_operator", matrix_json(rebuilt)}};
  });
}

// A(tau_1) written out by position: ones below the diagonal except a 2 in
// column n-1, the wrap-around q terms in columns 2n-2 and 2n-1.
ExactMatrix expected_a1(const QuadricContext& ctx) {
  const int n = ctx.n();
  const int size = ctx.basis_size();
  ExactMatrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  auto at = [&m](int r, int col) -> ExactScalar& { return m(static_cast<std::size_t>(r), static_cast<std::size_t>(col)); };
  for (int col = 0; col + 1 < size; ++col) at(col + 1, col) = 1;
  at(n, n - 1) = 2;
  at(0, size - 2) = 1;
  at(1, size - 1) = 1;
  return m;
}

CheckResult check_chevalley_golden(const CheckContext& c) {
  const ExactMatrix built = build_a1(c.ctx(), c.convention()).entries;
  const std::string serialized = serialize_matrix(built);
  const std::string expected = c.ctx().n() == 2 ? std::string(kGoldenA1N2) : serialize_matrix(expected_a1(c.ctx()));
  return c.verdict(serialized == expected, "A(tau_1) = " + serialized, [&] {
    return json{{"built", matrix_json(built)}, {"expected", json::parse(expected)}};
  });
}

CheckResult check_cayley_hamilton(const CheckContext& c) {
  const ExactMatrix a1 = build_a1(c.ctx(), c.convention()).entries;
  const ExactMatrix lhs = power(a1, static_cast<unsigned>(c.ctx().basis_size()));
  const ExactMatrix rhs = ExactScalar(4) * a1;
  return c.verdict(lhs == rhs, "A(tau_1)^{2n} == 4 A(tau_1)", [&] {
    return json{{"power", matrix_json(lhs)}, {"four_a1", matrix_json(rhs)}};
  });
}

CheckResult check_unit_column(const CheckContext& c) {
  const ExactMatrix m = build_ap(c.ctx(), c.index(), c.convention()).entries;
  const auto column = m.column(0);
  const auto expected = ClassVector::basis(c.ctx(), c.index()).coeffs;
  return c.verdict(column == expected, "A(tau_p) e_0 == e_p", [&] {
    std::vector<std::string> got;
    for (const auto& x : column) got.push_back(to_string(x));
    return json{{"column0", got}, {"operator", matrix_json(m)}};
  });
}

CheckResult check_commutativity(const CheckContext& c) {
  const auto ops = build_all_operators(c.ctx(), c.convention());
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      const ExactMatrix ab = ops[a].entries * ops[b].entries;
      const ExactMatrix ba = ops[b].entries * ops[a].entries;
      if (ab != ba)
        return c.fail("A(tau_" + std::to_string(a) + ") and A(tau_" + std::to_string(b) + ") do not commute",
                      json{{"p", a}, {"r", b}, {"pr", matrix_json(ab)}, {"rp", matrix_json(ba)}});
    }
  return c.pass(std::to_string(ops.size() * (ops.size() - 1) / 2) + " pairs commute");
}

CheckResult check_grading(const CheckContext& c) {
  const ExactMatrix m = build_ap(c.ctx(), c.index(), c.convention()).entries;
  const int top = c.ctx().dim();
  const int p = c.index().value();
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const int shift = ((static_cast<int>(j) - static_cast<int>(i) - p) % top + top) % top;
      if (sgn(m(j, i)) != 0 && shift != 0)
        return c.fail("nonzero entry off the grading", json{{"row", j}, {"col", i}, {"value", to_string(m(j, i))},
                                                            {"operator", matrix_json(m)}});
    }
  return c.pass("entries respect j = i + p mod 2n-1");
}

CheckResult check_diagonalization(const CheckContext& c) {
  const SpectrumReport report = verify_diagonalization(c.ctx());
  const bool ok = report.residual_diag.value() <= 1e-9 && report.max_eigen_residual.value() <= 1e-9 &&
                  report.pivots->invertible;
  return c.verdict(ok,
                   "residual " + format_double(*report.residual_diag) + ", eigen residual " +
                       format_double(*report.max_eigen_residual) + ", pivot ratio " +
                       format_double(report.pivots->min_pivot / report.pivots->max_pivot),
                   [&] {
                     return json{{"residual", *report.residual_diag},
                                 {"eigen_residual", *report.max_eigen_residual},
                                 {"min_pivot", report.pivots->min_pivot},
                                 {"max_pivot", report.pivots->max_pivot}};
                   });
}

CheckResult check_corollary32(const CheckContext& c) {
  const Corollary32Result r = corollary_32_check(c.ctx());
  return c.verdict(r.pass, "max deviation " + format_double(r.max_deviation),
                   [&] { return json{{"max_deviation", r.max_deviation}}; });
}

CheckResult check_simultaneous_diag(const CheckContext& c) {
  const ComplexMatrix m = to_complex(build_ap(c.ctx(), c.index(), c.convention()).entries);
  double worst = 0.0;
  for (const EigenIndex& e : eigen_order(c.ctx())) {
    const ComplexVector v = eigenvector(c.ctx(), e);
    const ComplexVector mv = multiply(m, v);
    const Complex mu = operator_eigenvalue(c.ctx(), c.index(), e);
    for (std::size_t r = 0; r < v.size(); ++r) worst = std::max(worst, std::abs(mv[r] - mu * v[r]));
  }
  return c.verdict(worst <= 1e-8, "max residual " + format_double(worst),
                   [&] { return json{{"max_residual", worst}}; });
}

CheckResult check_fpdim_consistency(const CheckContext& c) {
  const double closed = fp_dim(c.ctx(), c.index());
  const ExactPolynomial f = charpoly_faddeev(build_ap(c.ctx(), c.index(), c.convention()));
  const double numeric = max_root_modulus(f);
  return c.verdict(std::abs(closed - numeric) <= 1e-8,
                   "closed " + format_double(closed) + ", roots " + format_double(numeric), [&] {
                     return json{{"closed_form", closed}, {"max_root_modulus", numeric}, {"charpoly", poly_json(f)}};
                   });
}

bool predicted_simple(const QuadricContext& ctx, int p) { return p < ctx.dim() && ctx.d(p) == 1; }

CheckResult check_simplicity_gcd(const CheckContext& c) {
  const ExactPolynomial f = charpoly_faddeev(build_ap(c.ctx(), c.index(), c.convention()));
  const SquarefreeTest test = nonzero_part_is_squarefree(f);
  const int p = c.index().value();
  const bool predicted = predicted_simple(c.ctx(), p);
  return c.verdict(test.all_roots_simple() == predicted,
                   "gcd " + std::to_string(c.ctx().d(p)) + ", simple " + (test.all_roots_simple() ? "true" : "false"),
                   [&] {
                     return json{{"charpoly", poly_json(f)},
                                 {"zero_multiplicity", test.zero_multiplicity},
                                 {"nonzero_part_squarefree", test.nonzero_part_squarefree},
                                 {"predicted", predicted}};
                   });
}

CheckResult check_galkin(const CheckContext& c) {
  const GalkinResult g = galkin_check(c.ctx());
  std::string detail = "fpdim(c1) " + format_double(g.fpdim_c1) + ", margin " + format_double(g.margin);
  if (g.cross_check) detail += ", exact cross-check " + format_double(*g.cross_check);
  return c.verdict(g.pass && g.cross_check_ok, std::move(detail), [&] {
    json w{{"fpdim_c1", g.fpdim_c1}, {"bound", g.bound}, {"margin", g.margin}};
    if (g.cross_check) w["cross_check"] = *g.cross_check;
    return w;
  });
}

using CheckFn = CheckResult (*)(const CheckContext&);

enum class Scope { per_n, p_from_zero, p_from_one, p_grading, p_oracle };

struct CheckSpec {
  const char* id;
  Scope scope;
  CheckFn fn;
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = {
      {"charpoly_main", Scope::p_from_one, check_charpoly_main},
      {"charpoly_oracle", Scope::p_oracle, check_charpoly_oracle},
      {"chevalley_golden", Scope::per_n, check_chevalley_golden},
      {"cayley_hamilton", Scope::per_n, check_cayley_hamilton},
      {"unit_column", Scope::p_from_zero, check_unit_column},
      {"commutativity", Scope::per_n, check_commutativity},
      {"grading", Scope::p_grading, check_grading},
      {"diagonalization", Scope::per_n, check_diagonalization},
      {"corollary32", Scope::per_n, check_corollary32},
      {"simultaneous_diag", Scope::p_from_zero, check_simultaneous_diag},
      {"fpdim_consistency", Scope::p_from_one, check_fpdim_consistency},
      {"simplicity_gcd", Scope::p_from_one, check_simplicity_gcd},
      {"galkin", Scope::per_n, check_galkin},
  };
  return specs;
}

void append_tasks(const CheckSpec& spec, int n, std::vector<Task>& tasks) {
  const int top = 2 * n - 1;
  auto range = [&](int lo, int hi) {
    for (int p = lo; p <= hi; ++p) tasks.push_back(Task{spec.id, n, p});
  };
  switch (spec.scope) {
    case Scope::per_n: tasks.push_back(Task{spec.id, n, -1}); break;
    case Scope::p_from_zero: range(0, top); break;
    case Scope::p_from_one: range(1, top); break;
    case Scope::p_grading: range(1, top - 1); break;
    case Scope::p_oracle:
      if (n <= kOracleMaxN) range(0, top);
      break;
  }
}

CheckResult run_task(const Task& task, CheckFn fn, ChevalleyConvention convention) {
  CheckContext c(task, convention);
  try {
    return fn(c);
  } catch (const std::exception& e) {
    return c.fail(std::string("exception: ") + e.what(), json{{"exception", e.what()}});
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::pass; });
}

const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& spec : registry()) out.emplace_back(spec.id);
    return out;
  }();
  return ids;
}

VerificationReport run_suite(int n_min, int n_max, const std::set<std::string>& checks,
                             const SuiteOptions& options) {
  if (n_min < 2 || n_max < n_min)
    throw std::invalid_argument("invalid n range [" + std::to_string(n_min) + ", " + std::to_string(n_max) +
                                "]; need 2 <= n_min <= n_max");
  for (const auto& id : checks)
    if (std::find(known_check_ids().begin(), known_check_ids().end(), id) == known_check_ids().end())
      throw std::invalid_argument("unknown check id: " + id);

  std::vector<Task> tasks;
  std::vector<CheckFn> fns;
  for (const auto& spec : registry()) {
    if (!checks.empty() && !checks.contains(spec.id)) continue;
    const std::size_t before = tasks.size();
    for (int n = n_min; n <= n_max; ++n) append_tasks(spec, n, tasks);
    fns.insert(fns.end(), tasks.size() - before, spec.fn);
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(tasks[i], fns[i], options.convention);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.check_id, a.n, a.p) < std::tie(b.check_id, b.n, b.p);
  });

  VerificationReport report;
  report.tool_version = kToolVersion;
  report.n_min = n_min;
  report.n_max = n_max;
  for (const auto& r : results) {
    auto& counts = report.summary[r.check_id];
    (r.status == CheckStatus::pass ? counts.pass : counts.fail) += 1;
  }
  report.results = std::move(results);
  return report;
}

ExactMatrix operator_from_unit_column(const QuadricContext& ctx, SchubertIndex p, ChevalleyConvention convention) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  const ExactMatrix a1 = build_a1(ctx, convention).entries;

  // Krylov matrix K = [e_0, A e_0, ..., A^{N-1} e_0], augmented with e_p.
  std::vector<ExactMatrix> powers{ExactMatrix::identity(size)};
  for (std::size_t k = 1; k < size; ++k) powers.push_back(a1 * powers.back());
  ExactMatrix aug(size, size + 1);
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t r = 0; r < size; ++r) aug(r, k) = powers[k](r, 0);
  aug(static_cast<std::size_t>(p.value()), size) = 1;

  // Gauss-Jordan elimination over Q.
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(aug(pivot, col)) == 0) ++pivot;
    if (pivot == size) throw std::domain_error("tau_0 is not a cyclic vector for A(tau_1)");
    if (pivot != col)
      for (std::size_t c = 0; c <= size; ++c) std::swap(aug(col, c), aug(pivot, c));
    const ExactScalar inv = 1 / aug(col, col);
    for (std::size_t c = col; c <= size; ++c) aug(col, c) *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || sgn(aug(r, col)) == 0) continue;
      const ExactScalar factor = aug(r, col);
      for (std::size_t c = col; c <= size; ++c) aug(r, c) -= factor * aug(col, c);
    }
  }

  ExactMatrix result(size, size);
  for (std::size_t k = 0; k < size; ++k)
    if (sgn(aug(k, size)) != 0) result += aug(k, size) * powers[k];
  return result;
}

std::vector<SimplicityRow> simplicity_table(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("invalid n range for simplicity table");
  std::vector<SimplicityRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const QuadricContext ctx(n);
    const auto ops = build_all_operators(ctx);
    for (int p = 1; p <= ctx.dim(); ++p) {
      const ExactPolynomial f = charpoly_faddeev(ops[static_cast<std::size_t>(p)]);
      rows.push_back(SimplicityRow{n, p, ctx.d(p), nonzero_part_is_squarefree(f).all_roots_simple(),
                                   predicted_simple(ctx, p)});
    }
  }
  return rows;
}

std::string serialize_matrix(const ExactMatrix& m) { return matrix_json(m).dump(); }

std::string cap_witness(std::string payload) {
  const std::string marker = kTruncationMarker;
  if (payload.size() <= kWitnessCap) return payload;
  payload.resize(kWitnessCap - marker.size());
  payload += marker;
  return payload;
}

}  // namespace oddquad
