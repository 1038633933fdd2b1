#pragma once

// Quantum cohomology of the odd quadric OG(1, 2n+1), specialized at q = 1.
//
// The ring has the Schubert basis tau_0, ..., tau_{2n-1} and is generated by
// tau_1, whose multiplication rule (the quantum Chevalley formula) is all that
// is needed to build every multiplication operator A(tau_p).

#include "oddquad/exact_matrix.hpp"
#include "oddquad/scalar.hpp"

#include <vector>

namespace oddquad {

/// Family parameter n together with the constants derived from it.
class QuadricContext {
 public:
  /// Throws std::domain_error for n < 2.
  explicit QuadricContext(int n);

  int n() const { return n_; }
  /// Complex dimension of the quadric, 2n - 1.
  int dim() const { return 2 * n_ - 1; }
  int basis_size() const { return 2 * n_; }
  /// Degree of the quantum parameter q.
  int q_degree() const { return dim(); }

  /// gcd(p, 2n - 1).
  int d(int p) const;

  friend bool operator==(const QuadricContext&, const QuadricContext&) = default;

 private:
  int n_;
};

QuadricContext make_context(int n);

/// Index p of the Schubert class tau_p, 0 <= p <= 2n - 1.
class SchubertIndex {
 public:
  /// Throws std::out_of_range when p is outside [0, 2n - 1].
  SchubertIndex(const QuadricContext& ctx, int p);

  int value() const { return p_; }
  /// Dimension of the Schubert variety X(p).
  int variety_dimension() const { return variety_dim_; }

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int p_;
  int variety_dim_;
};

/// Element of the ring in the Schubert basis; coeffs[i] multiplies tau_i.
struct ClassVector {
  std::vector<ExactScalar> coeffs;

  /// The zero class of the given context.
  static ClassVector zero(const QuadricContext& ctx);
  /// The basis class tau_p.
  static ClassVector basis(const QuadricContext& ctx, SchubertIndex p);

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// Matrix of quantum multiplication by tau_p at q = 1. Column i is tau_p * tau_i.
struct OperatorMatrix {
  QuadricContext ctx;
  SchubertIndex p;
  ExactMatrix entries;
};

/// Where the factor 2 of the Chevalley rule sits.
///
/// `corrected` puts it on tau_1 * tau_{n-1} = 2 tau_n, which is the placement
/// of the worked 4x4 example and the only one under which A(tau_p) is
/// A(tau_1)^p (p < n) and A(tau_1)^p / 2 (p >= n). `literal` puts it on
/// tau_1 * tau_n = 2 tau_{n+1}; it exists only for mutation testing.
enum class ChevalleyConvention { corrected, literal };

/// Coefficients of tau_1 * tau_p with q = 1.
ClassVector chevalley_column(const QuadricContext& ctx, SchubertIndex p,
                             ChevalleyConvention convention = ChevalleyConvention::corrected);

/// A(tau_1): column i is chevalley_column(ctx, i).
OperatorMatrix build_a1(const QuadricContext& ctx,
                        ChevalleyConvention convention = ChevalleyConvention::corrected);

/// A(tau_p) from powers of A(tau_1):
///   p = 0            identity
///   1 <= p <= n-1    A^p
///   n <= p <= 2n-2   A^p / 2
///   p = 2n-1         A^{2n-1} / 2 - I
OperatorMatrix build_ap(const QuadricContext& ctx, SchubertIndex p,
                        ChevalleyConvention convention = ChevalleyConvention::corrected);

/// All operators A(tau_0), ..., A(tau_{2n-1}).
std::vector<OperatorMatrix> build_all_operators(
    const QuadricContext& ctx, ChevalleyConvention convention = ChevalleyConvention::corrected);

/// Matrix of multiplication by an arbitrary class a = sum_p a_p tau_p.
ExactMatrix multiplication_operator(const QuadricContext& ctx, const ClassVector& a);

/// a * b = (sum_p a_p A(tau_p)) b. Throws std::invalid_argument on length mismatch.
ClassVector star_multiply(const QuadricContext& ctx, const ClassVector& a, const ClassVector& b);

}  // namespace oddquad
