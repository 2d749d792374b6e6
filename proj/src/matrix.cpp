#include "mgd/matrix.hpp"

#include <cmath>
#include <string>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

Matrix::Matrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) {
    throw ContractViolation("matrix of dimension " + std::to_string(n_) + " needs " +
                            std::to_string(n_ * n_) + " entries, got " +
                            std::to_string(a_.size()));
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw ContractViolation("matrix entry is not finite");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(double alpha) {
  for (double& v : a_) v *= alpha;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator-(Matrix m) { return m *= -1.0; }
Matrix operator*(double alpha, Matrix m) { return m *= alpha; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double l = lhs(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

}  // namespace mgd
