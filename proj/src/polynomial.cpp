#include "oddquad/polynomial.hpp"

#include <stdexcept>

namespace oddquad {

ExactPolynomial::ExactPolynomial(std::vector<ExactScalar> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

void ExactPolynomial::trim() {
  while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::constant(const ExactScalar& c) { return ExactPolynomial({c}); }

ExactPolynomial ExactPolynomial::monomial(const ExactScalar& c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<ExactScalar> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::linear_factor(const ExactScalar& root) {
  return ExactPolynomial({-root, ExactScalar(1)});
}

ExactScalar ExactPolynomial::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int ExactPolynomial::degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

bool ExactPolynomial::is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }

bool ExactPolynomial::is_monic() const { return !is_zero() && leading() == 1; }

bool ExactPolynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

int ExactPolynomial::zero_root_multiplicity() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no root multiplicity");
  int k = 0;
  while (sgn(coeffs_[static_cast<std::size_t>(k)]) == 0) ++k;
  return k;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactScalar> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::monic() const {
  if (is_zero()) return *this;
  ExactScalar inv = 1 / leading();
  return *this * inv;
}

ExactPolynomial ExactPolynomial::shift_down(int k) const {
  if (k <= 0) return *this;
  if (static_cast<std::size_t>(k) >= coeffs_.size()) return {};
  return ExactPolynomial(std::vector<ExactScalar>(coeffs_.begin() + k, coeffs_.end()));
}

ExactScalar ExactPolynomial::evaluate(const ExactScalar& x) const {
  ExactScalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const ExactScalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial pow(const ExactPolynomial& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  ExactPolynomial result = ExactPolynomial::constant(1);
  ExactPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {ExactPolynomial{}, a};

  std::vector<ExactScalar> rem = a.coeffs();
  std::vector<ExactScalar> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const ExactScalar lead_inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const ExactScalar q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial monic_gcd(ExactPolynomial a, ExactPolynomial b) {
  while (!b.is_zero()) {
    ExactPolynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_text(const ExactPolynomial& f, std::string_view variable) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    ExactScalar c = f.coefficient(k);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";

    const bool unit = c == 1;
    if (k == 0 || !unit) {
      std::string magnitude = to_string(c);
      if (!is_integer(c) && k > 0) magnitude = "(" + magnitude + ")";
      out += magnitude;
    }
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> to_coefficient_strings(const ExactPolynomial& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

ExactPolynomial from_coefficient_strings(const std::vector<std::string>& ascending) {
  std::vector<ExactScalar> coeffs;
  coeffs.reserve(ascending.size());
  for (const auto& s : ascending) coeffs.push_back(parse_scalar(s));
  return ExactPolynomial(std::move(coeffs));
}

}  // namespace oddquad
