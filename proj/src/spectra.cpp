#include "oddquad/spectra.hpp"

#include "oddquad/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oddquad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPivotRatio = 1e-8;

// 4^{p/(2n-1)} e^{2 pi i (j p mod (2n-1)) / (2n-1)}, i.e. lambda_j^p with the angle reduced exactly.
Complex lambda_power(const QuadricContext& ctx, int j, int p) {
  const int top = ctx.dim();
  const double modulus = std::exp2(2.0 * p / top);
  const long turn = (static_cast<long>(j) * p) % top;
  return std::polar(modulus, kTwoPi * static_cast<double>(turn) / top);
}

}  // namespace

ComplexMatrix to_complex(const ExactMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("shape mismatch in complex matrix product");
  ComplexMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols != v.size()) throw std::invalid_argument("shape mismatch in complex matrix-vector product");
  ComplexVector out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) out[i] += a(i, k) * v[k];
  return out;
}

PivotTest pivot_test(ComplexMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("pivot test needs a square matrix");
  const std::size_t size = m.rows;
  PivotTest result;
  result.min_pivot = size == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t best = k;
    for (std::size_t r = k + 1; r < size; ++r)
      if (std::abs(m(r, k)) > std::abs(m(best, k))) best = r;
    if (best != k)
      for (std::size_t c = 0; c < size; ++c) std::swap(m(k, c), m(best, c));
    const Complex pivot = m(k, k);
    const double magnitude = std::abs(pivot);
    result.min_pivot = std::min(result.min_pivot, magnitude);
    result.max_pivot = std::max(result.max_pivot, magnitude);
    if (magnitude == 0.0) continue;
    for (std::size_t r = k + 1; r < size; ++r) {
      const Complex factor = m(r, k) / pivot;
      if (factor == 0.0) continue;
      for (std::size_t c = k; c < size; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  result.invertible = result.max_pivot > 0.0 && result.min_pivot > kPivotRatio * result.max_pivot;
  return result;
}

Complex a1_eigenvalue(const QuadricContext& ctx, int j) {
  if (j < 0 || j > ctx.dim() - 1)
    throw std::out_of_range("eigenvalue index " + std::to_string(j) + " outside [0, " +
                            std::to_string(ctx.dim() - 1) + "]");
  return lambda_power(ctx, j, 1);
}

Complex operator_eigenvalue(const QuadricContext& ctx, SchubertIndex index, EigenIndex e) {
  const int p = index.value();
  const int n = ctx.n();
  const int top = ctx.dim();
  if (p == 0) return 1.0;
  if (e.is_zero()) return p == top ? -1.0 : 0.0;
  a1_eigenvalue(ctx, e.j());  // range check
  if (p < n) return lambda_power(ctx, e.j(), p);
  if (p < top) return 0.5 * lambda_power(ctx, e.j(), p);
  return 0.5 * lambda_power(ctx, e.j(), top) - 1.0;
}

std::vector<EigenPair> closed_eigenvalues(const QuadricContext& ctx, SchubertIndex index) {
  const int p = index.value();
  const int n = ctx.n();
  const int top = ctx.dim();
  if (p == 0) throw std::domain_error("closed-form eigenvalues need p >= 1");
  if (p == top) return {EigenPair{1.0, top}, EigenPair{-1.0, 1}};

  const int d = ctx.d(p);
  const int distinct = top / d;
  const double modulus = p < n ? std::exp2(2.0 * p / top) : std::exp2(2.0 * p / top - 1.0);
  std::vector<EigenPair> out;
  out.reserve(static_cast<std::size_t>(distinct) + 1);
  out.push_back(EigenPair{0.0, 1});
  for (int k = 0; k < distinct; ++k)
    out.push_back(EigenPair{std::polar(modulus, kTwoPi * k / distinct), d});
  return out;
}

ComplexVector eigenvector(const QuadricContext& ctx, EigenIndex index) {
  const int n = ctx.n();
  const int top = ctx.dim();
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  ComplexVector v(size);
  if (index.is_zero()) {
    v.front() = -1.0;
    v.back() = 1.0;
    return v;
  }
  const int j = index.j();
  a1_eigenvalue(ctx, j);  // range check
  v[0] = (lambda_power(ctx, j, top) - 2.0) / 2.0;
  for (int k = 1; k <= top; ++k) {
    const Complex value = lambda_power(ctx, j, top - k);
    v[static_cast<std::size_t>(k)] = k < n ? value / 2.0 : value;
  }
  return v;
}

std::vector<EigenIndex> eigen_order(const QuadricContext& ctx) {
  std::vector<EigenIndex> order{EigenIndex::zero()};
  for (int j = 0; j < ctx.dim(); ++j) order.push_back(EigenIndex::nonzero(j));
  return order;
}

SpectrumReport verify_diagonalization(const QuadricContext& ctx) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  const ComplexMatrix a1 = to_complex(build_a1(ctx).entries);
  const SchubertIndex one(ctx, 1);
  const auto order = eigen_order(ctx);

  ComplexMatrix p(size, size);
  std::vector<Complex> diagonal(size);
  for (std::size_t c = 0; c < size; ++c) {
    const ComplexVector v = eigenvector(ctx, order[c]);
    for (std::size_t r = 0; r < size; ++r) p(r, c) = v[r];
    diagonal[c] = operator_eigenvalue(ctx, one, order[c]);
  }

  const ComplexMatrix ap = multiply(a1, p);
  double residual = 0.0;
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t r = 0; r < size; ++r) residual = std::max(residual, std::abs(ap(r, c) - p(r, c) * diagonal[c]));

  double eigen_residual = 0.0;
  for (std::size_t c = 0; c < size; ++c) {
    const ComplexVector v = eigenvector(ctx, order[c]);
    const ComplexVector av = multiply(a1, v);
    for (std::size_t r = 0; r < size; ++r) eigen_residual = std::max(eigen_residual, std::abs(av[r] - diagonal[c] * v[r]));
  }

  SpectrumReport report = spectrum_report(ctx, one);
  report.residual_diag = residual;
  report.max_eigen_residual = eigen_residual;
  report.pivots = pivot_test(p);
  return report;
}

SpectrumReport spectrum_report(const QuadricContext& ctx, SchubertIndex p) {
  SpectrumReport report;
  report.n = ctx.n();
  report.p = p.value();
  report.eigenpairs = closed_eigenvalues(ctx, p);
  report.fp_dim = fp_dim(ctx, p);
  report.simple = nonzero_part_is_squarefree(charpoly_faddeev(build_ap(ctx, p))).all_roots_simple();
  return report;
}

double fp_dim(const QuadricContext& ctx, SchubertIndex index) {
  const int p = index.value();
  const int top = ctx.dim();
  if (p == 0) throw std::domain_error("FP dimension formula needs p >= 1");
  if (p < ctx.n()) return std::exp2(2.0 * p / top);
  if (p < top) return std::exp2(2.0 * p / top - 1.0);
  return 1.0;
}

GalkinResult galkin_closed_form(int n) {
  if (n < 2) throw std::domain_error("Galkin check needs n >= 2");
  const double top = 2.0 * n - 1.0;
  GalkinResult result;
  result.n = n;
  result.fpdim_c1 = top * std::exp2(2.0 / top);
  result.bound = 2 * n;
  result.margin = result.fpdim_c1 - result.bound;
  result.pass = result.margin >= 0.0;
  return result;
}

GalkinResult galkin_check(const QuadricContext& ctx) {
  GalkinResult result = galkin_closed_form(ctx.n());
  if (ctx.n() <= kGalkinCrossCheckMaxN) {
    const ExactMatrix c1 = ExactScalar(ctx.dim()) * build_a1(ctx).entries;
    const double radius = max_root_modulus(charpoly_faddeev(c1));
    result.cross_check = radius;
    result.cross_check_ok = std::abs(radius - result.fpdim_c1) <= 1e-8;
  }
  return result;
}

Corollary32Result corollary_32_check(const QuadricContext& ctx) {
  const SchubertIndex one(ctx, 1);
  Corollary32Result result{true, 0.0};
  for (const EigenIndex& e : eigen_order(ctx)) {
    const Complex lambda = operator_eigenvalue(ctx, one, e);
    Complex power = 1.0;
    for (int k = 0; k < ctx.dim(); ++k) power *= lambda;
    const Complex value = (power - 2.0) / 2.0;
    const double expected = e.is_zero() ? -1.0 : 1.0;
    result.max_deviation = std::max(result.max_deviation, std::abs(value - expected));
  }
  result.pass = result.max_deviation <= 1e-9;
  return result;
}

bool eigenpairs_match(std::vector<EigenPair> expected, std::vector<EigenPair> actual, double tolerance) {
  if (expected.size() != actual.size()) return false;
  auto by_modulus_then_argument = [](const EigenPair& a, const EigenPair& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    return std::arg(a.value) < std::arg(b.value);
  };
  std::sort(expected.begin(), expected.end(), by_modulus_then_argument);
  std::sort(actual.begin(), actual.end(), by_modulus_then_argument);
  std::vector<bool> used(actual.size(), false);
  for (const EigenPair& e : expected) {
    bool found = false;
    for (std::size_t i = 0; i < actual.size(); ++i) {
      if (used[i] || actual[i].multiplicity != e.multiplicity) continue;
      if (std::abs(actual[i].value - e.value) <= tolerance) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<EigenPair> eigenpairs_from_polynomial(const ExactPolynomial& f) {
  std::vector<EigenPair> out;
  for (const RootCluster& root : roots_with_multiplicity(f)) out.push_back(EigenPair{root.value, root.multiplicity});
  return out;
}

}  // namespace oddquad
