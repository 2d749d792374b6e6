#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mgd {

/// Dense square real matrix, row-major. Entries are finite on construction.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of dimension n.
  explicit Matrix(std::size_t n);
  /// Throws ContractViolation if entries.size() != n*n or any entry is not finite.
  Matrix(std::size_t n, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t row, std::size_t col) const { return a_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return a_[row * n_ + col]; }
  std::span<const double> entries() const { return a_; }

  /// Euclidean (Frobenius) norm.
  double norm() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double alpha);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix m);
Matrix operator*(double alpha, Matrix m);
/// Matrix product.
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

}  // namespace mgd
