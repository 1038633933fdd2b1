#include "oddquad/roots.hpp"

#include "oddquad/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oddquad {

namespace {

// Power-of-two s >= 2 * max_k |a_{N-k}|^{1/k}, so every root of f has modulus <= s.
long root_scale_exponent(const ExactPolynomial& monic_f) {
  const int degree = monic_f.degree();
  double bound = 0.0;
  for (int k = 1; k <= degree; ++k) {
    const double a = std::abs(to_double(monic_f.coefficient(degree - k)));
    if (a > 0) bound = std::max(bound, std::pow(a, 1.0 / k));
  }
  if (bound == 0.0) return 0;
  return static_cast<long>(std::ceil(std::log2(2.0 * bound)));
}

}  // namespace

std::vector<Complex> durand_kerner_roots(const ExactPolynomial& f, const DurandKernerOptions& options) {
  const int degree = f.degree();
  if (degree < 1) throw std::domain_error("root finding needs a nonconstant polynomial");
  const ExactPolynomial monic_f = f.monic();
  if (degree == 1) return {Complex(-to_double(monic_f.coefficient(0)), 0.0)};

  // g(y) = f(s y) / s^N, coefficients a_k s^{k-N}; exact because s is a power of two.
  const long scale_exp = root_scale_exponent(monic_f);
  std::vector<double> g(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    ExactScalar c = monic_f.coefficient(k);
    const long shift = scale_exp * (degree - k);
    if (shift > 0)
      c /= ExactScalar(mpz_class(1) << static_cast<mp_bitcnt_t>(shift));
    else if (shift < 0)
      c *= ExactScalar(mpz_class(1) << static_cast<mp_bitcnt_t>(-shift));
    g[static_cast<std::size_t>(k)] = to_double(c);
  }

  double max_coeff = 0.0;
  for (int k = 0; k < degree; ++k) max_coeff = std::max(max_coeff, std::abs(g[static_cast<std::size_t>(k)]));
  const double radius = 1.0 + max_coeff;

  auto evaluate = [&g](Complex z) {
    Complex acc = 0.0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * z + *it;
    return acc;
  };

  std::vector<Complex> z(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / degree + 0.4);

  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= z[i] - z[j];
      const Complex step = evaluate(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (!std::isfinite(max_step)) break;
    converged = max_step < options.tolerance;
  }
  if (!converged)
    throw RootFindingError("Durand-Kerner did not converge within " + std::to_string(options.max_iterations) +
                           " iterations for a degree " + std::to_string(degree) + " polynomial");

  const double scale = std::ldexp(1.0, static_cast<int>(scale_exp));
  for (auto& root : z) root *= scale;
  return z;
}

std::vector<RootCluster> roots_with_multiplicity(const ExactPolynomial& f, const DurandKernerOptions& options) {
  std::vector<RootCluster> out;
  for (const auto& [factor, multiplicity] : squarefree_factorization(f))
    for (const Complex& root : durand_kerner_roots(factor, options)) out.push_back({root, multiplicity});
  return out;
}

double max_root_modulus(const ExactPolynomial& f, const DurandKernerOptions& options) {
  double best = 0.0;
  for (const Complex& root : durand_kerner_roots(squarefree_part(f), options)) best = std::max(best, std::abs(root));
  return best;
}

}  // namespace oddquad
