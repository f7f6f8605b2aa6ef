#pragma once

// Small dense real linear algebra: row-major matrices, a rank-4 tensor with
// an m^4 layout, and a cyclic Jacobi eigensolver for symmetric matrices.

#include <cstddef>
#include <vector>

namespace superfast {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<double>& data() const noexcept { return data_; }

  Matrix transpose() const;

  /// max |A_ij - A_ji|; requires a square matrix.
  double asymmetry() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max_ij |a_ij - b_ij|; matrices must share a shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Dense rank-4 tensor of extent n in every index.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t extent() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi. Iterates until the off-diagonal Frobenius norm falls below
/// tol times the matrix Frobenius norm.
SymmetricEigen jacobi_eigen(const Matrix& a, double tol = 1e-12,
                            int max_sweeps = 100);

}  // namespace superfast
