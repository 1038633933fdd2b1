#pragma once

#include "oddquad/exact_matrix.hpp"
#include "oddquad/polynomial.hpp"
#include "oddquad/ring.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace oddquad {

/// Largest matrix dimension accepted by charpoly_cofactor.
inline constexpr std::size_t kCofactorMaxDimension = 10;

/// det(xI - M) by the Faddeev-LeVerrier trace recursion in exact arithmetic.
ExactPolynomial charpoly_faddeev(const ExactMatrix& m);
ExactPolynomial charpoly_faddeev(const OperatorMatrix& m);

/// det(xI - M) by Laplace expansion over Q[x], memoizing minors by column set.
/// Independent of charpoly_faddeev; throws std::length_error above kCofactorMaxDimension.
ExactPolynomial charpoly_cofactor(const ExactMatrix& m);
ExactPolynomial charpoly_cofactor(const OperatorMatrix& m);

/// Closed-form characteristic polynomial of A(tau_p), 1 <= p <= 2n-1, with d = gcd(p, 2n-1):
///   x (x^{(2n-1)/d} - 2^{2p/d})^d             1 <= p < n
///   x (x^{(2n-1)/d} - 2^{(2p-(2n-1))/d})^d    n <= p < 2n-1
///   (x - 1)^{2n-1} (x + 1)                    p = 2n-1
/// Throws std::domain_error for p = 0.
ExactPolynomial closed_form_charpoly(const QuadricContext& ctx, SchubertIndex p);

struct SquarefreeTest {
  /// Multiplicity k of the root 0 that was stripped.
  int zero_multiplicity = 0;
  /// gcd(g, g') is constant for g = f / x^k.
  bool nonzero_part_squarefree = false;

  /// Every root of f (including 0) is simple.
  bool all_roots_simple() const { return nonzero_part_squarefree && zero_multiplicity <= 1; }
};

/// Throws std::domain_error on the zero polynomial.
SquarefreeTest nonzero_part_is_squarefree(const ExactPolynomial& f);

/// Yun's squarefree factorization of a nonconstant polynomial: f = lc * prod g_i^{m_i},
/// with each g_i monic, squarefree, nonconstant and pairwise coprime. Sorted by m_i.
std::vector<std::pair<ExactPolynomial, int>> squarefree_factorization(const ExactPolynomial& f);

/// f / gcd(f, f'), made monic: same roots, all simple.
ExactPolynomial squarefree_part(const ExactPolynomial& f);

}  // namespace oddquad
