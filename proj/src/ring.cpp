#include "oddquad/ring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace oddquad {

QuadricContext::QuadricContext(int n) : n_(n) {
  if (n < 2)
    throw std::domain_error("quadric parameter n must be at least 2, got " + std::to_string(n));
}

int QuadricContext::d(int p) const { return std::gcd(p, dim()); }

QuadricContext make_context(int n) { return QuadricContext(n); }

SchubertIndex::SchubertIndex(const QuadricContext& ctx, int p) : p_(p), variety_dim_(ctx.dim() - p) {
  if (p < 0 || p > ctx.dim())
    throw std::out_of_range("Schubert index " + std::to_string(p) + " outside [0, " +
                            std::to_string(ctx.dim()) + "]");
}

ClassVector ClassVector::zero(const QuadricContext& ctx) {
  return ClassVector{std::vector<ExactScalar>(static_cast<std::size_t>(ctx.basis_size()))};
}

ClassVector ClassVector::basis(const QuadricContext& ctx, SchubertIndex p) {
  ClassVector v = zero(ctx);
  v.coeffs[static_cast<std::size_t>(p.value())] = 1;
  return v;
}

ClassVector chevalley_column(const QuadricContext& ctx, SchubertIndex p, ChevalleyConvention convention) {
  const int n = ctx.n();
  const int top = ctx.dim();  // 2n - 1
  const int i = p.value();
  ClassVector out = ClassVector::zero(ctx);
  auto add = [&out](int index, int coefficient) { out.coeffs[static_cast<std::size_t>(index)] += coefficient; };

  const int doubled_from = convention == ChevalleyConvention::corrected ? n - 1 : n;
  if (i == top) {
    add(1, 1);  // q tau_1
  } else if (i == top - 1) {
    add(top, 1);
    add(0, 1);  // q tau_0
  } else if (i == doubled_from) {
    add(i + 1, 2);
  } else {
    add(i + 1, 1);
  }
  return out;
}

OperatorMatrix build_a1(const QuadricContext& ctx, ChevalleyConvention convention) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  ExactMatrix m(size, size);
  for (int i = 0; i < ctx.basis_size(); ++i) {
    ClassVector col = chevalley_column(ctx, SchubertIndex(ctx, i), convention);
    for (std::size_t j = 0; j < size; ++j) m(j, static_cast<std::size_t>(i)) = col.coeffs[j];
  }
  return OperatorMatrix{ctx, SchubertIndex(ctx, 1), std::move(m)};
}

namespace {

void require_half_integer_entries(const ExactMatrix& m, int p) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!has_half_integer_denominator(m(r, c)))
        throw std::logic_error("A(tau_" + std::to_string(p) + ") entry " + to_string(m(r, c)) +
                               " has a denominator other than 1 or 2");
}

ExactMatrix operator_from_power(const QuadricContext& ctx, int p, const ExactMatrix& a1_power) {
  const int n = ctx.n();
  const ExactScalar half(1, 2);
  if (p < n) return a1_power;
  if (p < ctx.dim()) return half * a1_power;
  return half * a1_power - ExactMatrix::identity(static_cast<std::size_t>(ctx.basis_size()));
}

}  // namespace

OperatorMatrix build_ap(const QuadricContext& ctx, SchubertIndex p, ChevalleyConvention convention) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  if (p.value() == 0) return OperatorMatrix{ctx, p, ExactMatrix::identity(size)};
  const ExactMatrix a1 = build_a1(ctx, convention).entries;
  ExactMatrix m = operator_from_power(ctx, p.value(), power(a1, static_cast<unsigned>(p.value())));
  require_half_integer_entries(m, p.value());
  return OperatorMatrix{ctx, p, std::move(m)};
}

std::vector<OperatorMatrix> build_all_operators(const QuadricContext& ctx, ChevalleyConvention convention) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  const ExactMatrix a1 = build_a1(ctx, convention).entries;
  std::vector<OperatorMatrix> ops;
  ops.reserve(size);
  ops.push_back(OperatorMatrix{ctx, SchubertIndex(ctx, 0), ExactMatrix::identity(size)});
  ExactMatrix running = ExactMatrix::identity(size);
  for (int p = 1; p <= ctx.dim(); ++p) {
    running = a1 * running;
    ExactMatrix m = operator_from_power(ctx, p, running);
    require_half_integer_entries(m, p);
    ops.push_back(OperatorMatrix{ctx, SchubertIndex(ctx, p), std::move(m)});
  }
  return ops;
}

ExactMatrix multiplication_operator(const QuadricContext& ctx, const ClassVector& a) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  if (a.coeffs.size() != size) throw std::invalid_argument("class vector has wrong length");
  ExactMatrix total(size, size);
  std::vector<OperatorMatrix> ops;
  for (std::size_t p = 0; p < size; ++p) {
    if (sgn(a.coeffs[p]) == 0) continue;
    if (ops.empty()) ops = build_all_operators(ctx);
    total += a.coeffs[p] * ops[p].entries;
  }
  return total;
}

ClassVector star_multiply(const QuadricContext& ctx, const ClassVector& a, const ClassVector& b) {
  const auto size = static_cast<std::size_t>(ctx.basis_size());
  if (a.coeffs.size() != size || b.coeffs.size() != size)
    throw std::invalid_argument("class vector has wrong length");

  // sum_p a_p A(tau_p) b, with A(tau_p) b obtained from the Krylov vectors A(tau_1)^p b.
  const ExactMatrix a1 = build_a1(ctx).entries;
  const ExactScalar half(1, 2);
  std::vector<ExactScalar> result(size);
  std::vector<ExactScalar> krylov = b.coeffs;
  for (std::size_t i = 0; i < size; ++i) result[i] = a.coeffs[0] * b.coeffs[i];
  for (int p = 1; p <= ctx.dim(); ++p) {
    krylov = a1 * krylov;
    const ExactScalar& weight = a.coeffs[static_cast<std::size_t>(p)];
    if (sgn(weight) == 0) continue;
    for (std::size_t i = 0; i < size; ++i) {
      ExactScalar term = krylov[i];
      if (p >= ctx.n()) term *= half;
      if (p == ctx.dim()) term -= b.coeffs[i];
      result[i] += weight * term;
    }
  }
  return ClassVector{std::move(result)};
}

}  // namespace oddquad
