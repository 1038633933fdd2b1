#pragma once

#include "oddquad/scalar.hpp"

#include <cstddef>
#include <vector>

namespace oddquad {

/// Dense row-major matrix over ExactScalar.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t size);
  static ExactMatrix from_rows(const std::vector<std::vector<ExactScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<ExactScalar> column(std::size_t c) const;
  ExactScalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend std::vector<ExactScalar> operator*(const ExactMatrix& a, const std::vector<ExactScalar>& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// Square matrix power by repeated squaring; power(m, 0) is the identity.
ExactMatrix power(const ExactMatrix& m, unsigned exponent);

}  // namespace oddquad
