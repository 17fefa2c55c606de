// Copyright (c) 2026 camtrack contributors
// SPDX-License-Identifier: Apache-2.0

// Dense linear-algebra kernels sized for the calibration pipeline:
// symmetric eigen-solve (cyclic Jacobi), 3x3 SVD, linear least squares,
// and a derivative-free simplex minimizer.

#pragma once

#include <functional>
#include <vector>

#include "camtrack/linalg.hpp"

namespace camtrack::numerics {

// Row-major dense matrix.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

Mat transpose(const Mat& m);
Mat operator*(const Mat& a, const Mat& b);
std::vector<double> operator*(const Mat& m, const std::vector<double>& v);

struct SymmetricEigenResult {
  std::vector<double> eigenvalues;  // ascending
  Mat eigenvectors;                 // orthonormal columns, same order
};

// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
// Ties between equal eigenvalues keep the original index order.
SymmetricEigenResult sym_eig(const Mat& S);

// Unit eigenvector of the smallest eigenvalue, sign fixed so the
// largest-magnitude entry is positive.
std::vector<double> min_eigvec(const Mat& S);

struct Svd3Result {
  Mat3 U;
  Vec3 S;  // non-negative, descending
  Mat3 V;  // input == U * diag(S) * V^T
};

Svd3Result svd3(const Mat3& M);

// Least-squares solution of A x = b for m >= n full-rank A (Householder QR).
std::vector<double> lstsq(const Mat& A, const std::vector<double>& b);

struct MinimizeOptions {
  int max_iterations = 2000;
  double tolerance = 1e-10;  // relative objective spread across the simplex
  double x_tolerance = 1e-9;
  // Called once per iteration with the best objective value seen so far.
  std::function<void(int iteration, double best_value)> on_iteration;
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
};

// Derivative-free Nelder-Mead simplex minimization.
MinimizeResult minimize(const std::function<double(const std::vector<double>&)>& objective,
                        const std::vector<double>& x0, const MinimizeOptions& options = {});

}  // namespace camtrack::numerics
