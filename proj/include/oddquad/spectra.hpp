#pragma once

// Closed-form spectral data of the operators A(tau_p) and numeric checks of it.
//
// The nonzero eigenvalues of A(tau_1) are lambda_j = 4^{1/(2n-1)} e^{2 pi i j/(2n-1)},
// j = 0..2n-2, and the remaining eigenvalue is 0. Every A(tau_p) is diagonal in
// the same eigenbasis.

#include "oddquad/polynomial.hpp"
#include "oddquad/ring.hpp"
#include "oddquad/roots.hpp"

#include <optional>
#include <vector>

namespace oddquad {

struct EigenPair {
  Complex value;
  int multiplicity = 0;

  friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

/// Selects an eigenvector of A(tau_1): the zero eigenvalue or lambda_j.
class EigenIndex {
 public:
  static EigenIndex zero() { return EigenIndex(std::nullopt); }
  static EigenIndex nonzero(int j) { return EigenIndex(j); }

  bool is_zero() const { return !j_.has_value(); }
  /// Only meaningful when !is_zero().
  int j() const { return j_.value_or(-1); }

 private:
  explicit EigenIndex(std::optional<int> j) : j_(j) {}
  std::optional<int> j_;
};

using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix, used only for the numeric checks.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

ComplexMatrix to_complex(const ExactMatrix& m);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& v);

struct PivotTest {
  double min_pivot = 0.0;
  double max_pivot = 0.0;
  /// min_pivot > 1e-8 * max_pivot
  bool invertible = false;

  friend bool operator==(const PivotTest&, const PivotTest&) = default;
};

/// Gaussian elimination with partial pivoting on a square matrix.
PivotTest pivot_test(ComplexMatrix m);

struct SpectrumReport {
  int n = 0;
  int p = 0;
  std::vector<EigenPair> eigenpairs;
  double fp_dim = 0.0;
  bool simple = false;
  /// Diagonalization data, only present for reports built by verify_diagonalization.
  std::optional<double> residual_diag;
  std::optional<double> max_eigen_residual;
  std::optional<PivotTest> pivots;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// lambda_j, 0 <= j <= 2n-2. Throws std::out_of_range otherwise.
Complex a1_eigenvalue(const QuadricContext& ctx, int j);

/// Eigenvalue of A(tau_p) on the eigenvector selected by `index`, from the closed form.
Complex operator_eigenvalue(const QuadricContext& ctx, SchubertIndex p, EigenIndex index);

/// Distinct eigenvalues of A(tau_p), 1 <= p <= 2n-1, with multiplicities.
/// Zero first (for p <= 2n-2), then the nonzero values in increasing argument order.
std::vector<EigenPair> closed_eigenvalues(const QuadricContext& ctx, SchubertIndex p);

/// v_j = ((l^{2n-1} - 2)/2, l^{2n-2}/2, ..., l^n/2, l^{n-1}, ..., l, 1); (-1, 0, ..., 0, 1) for l = 0.
ComplexVector eigenvector(const QuadricContext& ctx, EigenIndex index);

/// Eigenbasis in the order v_zero, v_0, ..., v_{2n-2}.
std::vector<EigenIndex> eigen_order(const QuadricContext& ctx);

/// Max-norm of A(tau_1) P - P D together with the pivot test of P.
SpectrumReport verify_diagonalization(const QuadricContext& ctx);

/// Closed-form eigenpairs and FP dimension plus exact simplicity of A(tau_p).
SpectrumReport spectrum_report(const QuadricContext& ctx, SchubertIndex p);

/// Closed-form Frobenius-Perron dimension of tau_p, 1 <= p <= 2n-1.
double fp_dim(const QuadricContext& ctx, SchubertIndex p);

struct GalkinResult {
  int n = 0;
  /// Spectral radius of multiplication by c_1 = (2n-1) tau_1.
  double fpdim_c1 = 0.0;
  int bound = 0;
  double margin = 0.0;
  bool pass = false;
  /// Max root modulus of the exact characteristic polynomial of (2n-1) A(tau_1), when computed.
  std::optional<double> cross_check;
  bool cross_check_ok = true;

  friend bool operator==(const GalkinResult&, const GalkinResult&) = default;
};

inline constexpr int kGalkinCrossCheckMaxN = 12;

/// (2n-1) 4^{1/(2n-1)} against dim + 1 = 2n. The exact cross-check runs for n <= 12.
GalkinResult galkin_check(const QuadricContext& ctx);

/// Closed-form FPdim(c_1) and margin only; cheap enough for n in the millions.
GalkinResult galkin_closed_form(int n);

struct Corollary32Result {
  bool pass = false;
  double max_deviation = 0.0;
};

/// (l^{2n-1} - 2) / 2 is -1 at l = 0 and +1 at every other eigenvalue of A(tau_1).
Corollary32Result corollary_32_check(const QuadricContext& ctx);

/// One-to-one pairing of eigenpairs: equal multiplicities, values within `tolerance`.
/// Candidates are taken greedily in (modulus, argument) order.
bool eigenpairs_match(std::vector<EigenPair> expected, std::vector<EigenPair> actual, double tolerance);

/// Roots of an exact polynomial as eigenpairs.
std::vector<EigenPair> eigenpairs_from_polynomial(const ExactPolynomial& f);

}  // namespace oddquad
