#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swrad {

/// Smallest pivot magnitude accepted by LuFactorization.
inline constexpr double kPivotTolerance = 1e-14;

/// Row-major dense matrix. Small systems only (4x4 enclosures, n-zone buildings).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  std::vector<double> multiply(std::span<const double> x) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// LU factorization with partial (row) pivoting, PA = LU.
/// Throws Error(Singular) when a pivot falls below kPivotTolerance.
class LuFactorization {
 public:
  explicit LuFactorization(DenseMatrix a);

  std::vector<double> solve(std::span<const double> b) const;
  std::size_t size() const noexcept { return lu_.rows(); }

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

std::vector<double> solve_dense(const DenseMatrix& a, std::span<const double> b);

double max_abs(std::span<const double> v);

}  // namespace swrad
