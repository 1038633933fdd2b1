#pragma once

#include "oddquad/polynomial.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace oddquad {

using Complex = std::complex<double>;

/// Raised when simultaneous iteration fails to settle within the iteration cap.
class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DurandKernerOptions {
  double tolerance = 1e-12;
  int max_iterations = 500;
};

/// All complex roots of a nonconstant polynomial by Durand-Kerner iteration.
///
/// The polynomial is first rescaled exactly by a power of two so that its roots
/// lie in a disc of radius about 1; the iteration starts on the circle of radius
/// 1 + max|coefficient| of the rescaled monic polynomial and stops once every
/// update (in rescaled coordinates) is below `tolerance`. Repeated roots slow
/// the iteration down, so callers wanting accuracy pass squarefree input.
std::vector<Complex> durand_kerner_roots(const ExactPolynomial& f, const DurandKernerOptions& options = {});

struct RootCluster {
  Complex value;
  int multiplicity = 0;
};

/// Roots with multiplicities: exact squarefree factorization, then Durand-Kerner
/// on each squarefree factor.
std::vector<RootCluster> roots_with_multiplicity(const ExactPolynomial& f,
                                                 const DurandKernerOptions& options = {});

/// Largest root modulus of a nonconstant polynomial (computed on its squarefree part).
double max_root_modulus(const ExactPolynomial& f, const DurandKernerOptions& options = {});

}  // namespace oddquad
