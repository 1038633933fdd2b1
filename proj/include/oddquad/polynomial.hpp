#pragma once

#include "oddquad/scalar.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddquad {

/// Univariate polynomial over the rationals, coefficients ascending by degree.
///
/// Trailing zeros are always trimmed; the zero polynomial is stored as the
/// single coefficient 0 and reports degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() : coeffs_{ExactScalar(0)} {}
  explicit ExactPolynomial(std::vector<ExactScalar> ascending);

  static ExactPolynomial constant(const ExactScalar& c);
  /// c * x^k
  static ExactPolynomial monomial(const ExactScalar& c, int k);
  /// x - root
  static ExactPolynomial linear_factor(const ExactScalar& root);

  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero outside the stored range.
  ExactScalar coefficient(int k) const;
  int degree() const;
  bool is_zero() const;
  const ExactScalar& leading() const { return coeffs_.back(); }
  bool is_monic() const;
  /// All coefficients have denominator 1.
  bool is_integral() const;
  /// Largest k such that x^k divides the polynomial (the zero polynomial is rejected).
  int zero_root_multiplicity() const;

  ExactPolynomial derivative() const;
  ExactPolynomial monic() const;
  /// Divides out x^k.
  ExactPolynomial shift_down(int k) const;
  ExactScalar evaluate(const ExactScalar& x) const;

  ExactPolynomial& operator+=(const ExactPolynomial& other);
  ExactPolynomial& operator-=(const ExactPolynomial& other);
  ExactPolynomial& operator*=(const ExactScalar& s);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const ExactScalar& s) { return a *= s; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  void trim();
  std::vector<ExactScalar> coeffs_;
};

ExactPolynomial pow(const ExactPolynomial& base, int exponent);

/// Euclidean division; throws std::domain_error when dividing by zero.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b);

/// Monic gcd by the Euclidean algorithm. gcd(0, 0) is 0.
ExactPolynomial monic_gcd(ExactPolynomial a, ExactPolynomial b);

/// Pretty form in descending degree, e.g. "λ^4 - 4λ".
std::string to_text(const ExactPolynomial& f, std::string_view variable = "λ");

/// Ascending coefficient strings in ExactScalar text form.
std::vector<std::string> to_coefficient_strings(const ExactPolynomial& f);
ExactPolynomial from_coefficient_strings(const std::vector<std::string>& ascending);

}  // namespace oddquad
