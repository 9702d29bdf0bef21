#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace sgc {

/// Row-major dense matrix of doubles. Graph matrices only ever hold small
/// integers, which doubles represent exactly.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> values() const noexcept { return data_; }

  bool is_symmetric(double tol = 0.0) const;
  bool is_integral() const;
  double trace() const;
  double frobenius_norm() const;

  DenseMatrix transposed() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(double s);

  friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
  friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
  friend DenseMatrix operator*(DenseMatrix lhs, double s) { return lhs *= s; }
  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

}  // namespace sgc
