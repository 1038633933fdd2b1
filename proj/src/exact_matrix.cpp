#include "oddquad/exact_matrix.hpp"

#include <stdexcept>

namespace oddquad {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t size) {
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<ExactScalar>>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<ExactScalar> ExactMatrix::column(std::size_t c) const {
  std::vector<ExactScalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  ExactMatrix out(a.rows_, b.cols_);
  ExactScalar tmp;
  // The operators here are very sparse; skipping zero factors dominates the cost.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactScalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        tmp = aik * bkj;
        out(i, j) += tmp;
      }
    }
  }
  return out;
}

std::vector<ExactScalar> operator*(const ExactMatrix& a, const std::vector<ExactScalar>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector *");
  std::vector<ExactScalar> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix power(const ExactMatrix& m, unsigned exponent) {
  if (!m.square()) throw std::invalid_argument("power of a non-square matrix");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace oddquad
