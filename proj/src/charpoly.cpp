#include "oddquad/charpoly.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace oddquad {

ExactPolynomial charpoly_faddeev(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t size = a.rows();
  std::vector<ExactScalar> c(size + 1);
  c[size] = 1;

  // M_k = A M_{k-1} + c_{N-k+1} I,  c_{N-k} = -tr(A M_k) / k
  ExactMatrix m(size, size);
  for (std::size_t k = 1; k <= size; ++k) {
    ExactMatrix next = a * m;
    for (std::size_t i = 0; i < size; ++i) next(i, i) += c[size - k + 1];
    m = std::move(next);
    ExactScalar tr = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (sgn(a(i, j)) != 0 && sgn(m(j, i)) != 0) tr += a(i, j) * m(j, i);
    c[size - k] = -tr / static_cast<unsigned long>(k);
  }
  return ExactPolynomial(std::move(c));
}

ExactPolynomial charpoly_faddeev(const OperatorMatrix& m) { return charpoly_faddeev(m.entries); }

namespace {

class CofactorExpansion {
 public:
  explicit CofactorExpansion(const ExactMatrix& m)
      : m_(m), size_(m.rows()), memo_(std::size_t{1} << m.rows()) {}

  ExactPolynomial run() { return minor(full_mask()); }

 private:
  std::uint32_t full_mask() const { return (std::uint32_t{1} << size_) - 1U; }

  // Entry (r, c) of xI - M.
  ExactPolynomial entry(std::size_t r, std::size_t c) const {
    if (r == c) return ExactPolynomial({-m_(r, c), ExactScalar(1)});
    return ExactPolynomial::constant(-m_(r, c));
  }

  // Determinant of rows [size - |cols|, size) restricted to the column set `cols`,
  // expanded along its first row.
  const ExactPolynomial& minor(std::uint32_t cols) {
    auto& slot = memo_[cols];
    if (slot) return *slot;
    if (cols == 0) {
      slot = ExactPolynomial::constant(1);
      return *slot;
    }
    const std::size_t row = size_ - static_cast<std::size_t>(std::popcount(cols));
    ExactPolynomial total;
    int position = 0;
    for (std::size_t c = 0; c < size_; ++c) {
      if (!(cols & (std::uint32_t{1} << c))) continue;
      if (row != c && sgn(m_(row, c)) == 0) {
        ++position;
        continue;
      }
      ExactPolynomial term = entry(row, c) * minor(cols & ~(std::uint32_t{1} << c));
      if (position % 2 == 0)
        total += term;
      else
        total -= term;
      ++position;
    }
    slot = std::move(total);
    return *slot;
  }

  const ExactMatrix& m_;
  std::size_t size_;
  std::vector<std::optional<ExactPolynomial>> memo_;
};

}  // namespace

ExactPolynomial charpoly_cofactor(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  if (m.rows() > kCofactorMaxDimension)
    throw std::length_error("cofactor expansion limited to dimension " +
                            std::to_string(kCofactorMaxDimension) + ", got " + std::to_string(m.rows()));
  if (m.rows() == 0) return ExactPolynomial::constant(1);
  return CofactorExpansion(m).run();
}

ExactPolynomial charpoly_cofactor(const OperatorMatrix& m) { return charpoly_cofactor(m.entries); }

ExactPolynomial closed_form_charpoly(const QuadricContext& ctx, SchubertIndex index) {
  const int p = index.value();
  const int n = ctx.n();
  const int top = ctx.dim();
  if (p == 0) throw std::domain_error("closed-form characteristic polynomial needs p >= 1");

  const ExactPolynomial x = ExactPolynomial::monomial(1, 1);
  if (p == top) {
    return pow(ExactPolynomial::linear_factor(1), top) * ExactPolynomial::linear_factor(-1);
  }
  const int d = ctx.d(p);
  const int two_exponent = p < n ? 2 * p / d : (2 * p - top) / d;
  mpz_class shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(two_exponent));
  const ExactPolynomial block =
      ExactPolynomial::monomial(1, top / d) - ExactPolynomial::constant(ExactScalar(shift));
  return x * pow(block, d);
}

SquarefreeTest nonzero_part_is_squarefree(const ExactPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree test on the zero polynomial");
  SquarefreeTest result;
  result.zero_multiplicity = f.zero_root_multiplicity();
  const ExactPolynomial g = f.shift_down(result.zero_multiplicity);
  result.nonzero_part_squarefree = monic_gcd(g, g.derivative()).degree() <= 0;
  return result;
}

std::vector<std::pair<ExactPolynomial, int>> squarefree_factorization(const ExactPolynomial& f) {
  if (f.degree() < 1) throw std::domain_error("squarefree factorization of a constant polynomial");
  std::vector<std::pair<ExactPolynomial, int>> factors;
  const ExactPolynomial monic_f = f.monic();
  const ExactPolynomial fd = monic_f.derivative();
  const ExactPolynomial a = monic_gcd(monic_f, fd);
  ExactPolynomial b = divmod(monic_f, a).first;
  ExactPolynomial c = divmod(fd, a).first;
  ExactPolynomial dpoly = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    ExactPolynomial g = monic_gcd(b, dpoly);
    if (g.degree() >= 1) factors.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(dpoly, g).first;
    dpoly = c - b.derivative();
  }
  return factors;
}

ExactPolynomial squarefree_part(const ExactPolynomial& f) {
  if (f.degree() < 1) return f.monic();
  return divmod(f, monic_gcd(f, f.derivative())).first.monic();
}

}  // namespace oddquad
