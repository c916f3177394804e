#include "swrad/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "swrad/error.hpp"

namespace swrad {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

LuFactorization::LuFactorization(DenseMatrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw Error(ErrorCode::BadValue, "LU factorization needs a square matrix");
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    }
    if (!(best >= kPivotTolerance))
      throw Error(ErrorCode::Singular, "pivot " + std::to_string(best) + " below tolerance at column " +
                                           std::to_string(k));
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
    }
    const double pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu_(i, k) / pivot;
      lu_(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw Error(ErrorCode::BadValue, "right-hand side size mismatch");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

std::vector<double> solve_dense(const DenseMatrix& a, std::span<const double> b) {
  return LuFactorization(a).solve(b);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace swrad
