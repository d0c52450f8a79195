// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdopt/error.hpp"

namespace hdopt {

using Vec = std::vector<double>;

/// Dense row-major matrix. Kept deliberately small: the solvers in this
/// library only need dense symmetric kernels at desk scale.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double &operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  double *data() { return data_.data(); }
  const double *data() const { return data_.data(); }

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  bool operator==(const Matrix &other) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Small vector/matrix kernels shared by every solver.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);
double max_abs(const Matrix &m);
Vec matvec(const Matrix &m, std::span<const double> x);
Vec matvec_transposed(const Matrix &m, std::span<const double> x);
Matrix matmul(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &m);
Vec axpy(double alpha, std::span<const double> x, std::span<const double> y);

/// Eigenvalues ascending; eigenvector columns aligned with them.
struct EigenDecomposition {
  Vec eigenvalues;
  Matrix eigenvectors;
};

namespace detail {
// Cyclic Jacobi rotations on a symmetric matrix. Sweeps until the
// off-diagonal Frobenius norm falls below 1e-13 * ||A||_F, capped at 100
// sweeps (throws Errc::no_convergence naming the residual norm).
EigenDecomposition jacobi_eigen(const Matrix &sym);
} // namespace detail

/// Symmetric positive definite matrix. Construction validates symmetry
/// (|A_ij - A_ji| <= 1e-12 * max|A|), strictly positive diagonal, and
/// lambda_min > 1e-12 * lambda_max via a full eigendecomposition, which is
/// cached for reuse by the solvers.
class SpdMatrix {
public:
  static SpdMatrix from_dense(Matrix entries);

  int dim() const { return a_.rows(); }
  double operator()(int i, int j) const { return a_(i, j); }
  const Matrix &dense() const { return a_; }
  const Vec &diagonal() const { return diag_; }
  const EigenDecomposition &eigen() const { return eigen_; }
  double min_eigenvalue() const { return eigen_.eigenvalues.front(); }
  double max_eigenvalue() const { return eigen_.eigenvalues.back(); }

private:
  SpdMatrix() = default;
  Matrix a_;
  Vec diag_;
  EigenDecomposition eigen_;
};

/// Position/velocity pair of the flow.
struct PhaseState {
  Vec x;
  Vec v;
};

/// The quadratic (1/2) x^T A x - b^T x. The minimizer x_* = A^{-1} b is
/// solved once through the cached eigendecomposition, and the content hash
/// identifies the instance in trace files.
class QuadraticProblem {
public:
  QuadraticProblem(SpdMatrix a, Vec b);

  int dim() const { return a_.dim(); }
  const SpdMatrix &A() const { return a_; }
  const Vec &b() const { return b_; }
  const Vec &x_star() const { return x_star_; }
  double f_star() const { return f_star_; }
  const EigenDecomposition &eigen() const { return a_.eigen(); }
  const std::string &hash() const { return hash_; }

private:
  SpdMatrix a_;
  Vec b_;
  Vec x_star_;
  double f_star_ = 0.0;
  std::string hash_;
};

/// Returns the cached decomposition (recomputing would give the same
/// rotations: the sweep order is fixed, so the result is deterministic).
const EigenDecomposition &sym_eigendecompose(const SpdMatrix &a);

/// cos(eta sqrt(A)) and sqrt(A) sin(eta sqrt(A)), both symmetric.
std::pair<Matrix, Matrix> matrix_trig(const SpdMatrix &a, double eta);

/// max |lambda_i(M)| for a square matrix. Symmetric inputs (within
/// 1e-12 * max|M|) go through the Jacobi eigensolver; everything else falls
/// back to power iteration (200 iterations, 1e-10 relative-change stop,
/// Errc::no_convergence carries the last estimate).
double spectral_radius(const Matrix &m);

/// rho(I - W D^{-1} A) for diagonal W > 0, computed exactly via the
/// similar symmetric matrix I - W^{1/2} D^{-1/2} A D^{-1/2} W^{1/2}.
double spectral_radius_scaled_iteration(const SpdMatrix &a,
                                        std::span<const double> w);

/// f(x) = (1/2) x^T A x - b^T x and its gradient A x - b.
std::pair<double, Vec> quadratic_eval(const QuadraticProblem &p,
                                      std::span<const double> x);

} // namespace hdopt
