// Copyright 2026 The mvcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Finite-dimensional C*-algebra substrate: square complex matrices with
 * adjoint, operator norm, positivity checks, inverse square roots,
 * Kronecker products and partial traces.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "mvcs/errors.hpp"

namespace mvcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances used by every spectral decision in the library.
/// psd_floor bounds how negative an eigenvalue may be before a matrix stops
/// counting as positive; equality_tol bounds operator-norm defects of
/// algebraic identities.
struct SpectralTolerance {
  double psd_floor = 1e-10;
  double equality_tol = 1e-8;
};

/// Element of a matrix C*-algebra M_n(C).  Square, all entries finite.
class CStarMatrix {
 public:
  CStarMatrix() : mat_(Matrix::Zero(0, 0)) {}
  explicit CStarMatrix(Matrix m);

  static CStarMatrix identity(Eigen::Index dim);
  static CStarMatrix zero(Eigen::Index dim);

  Eigen::Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

  CStarMatrix adjoint() const { return CStarMatrix(mat_.adjoint()); }

  friend CStarMatrix operator+(const CStarMatrix& a, const CStarMatrix& b);
  friend CStarMatrix operator-(const CStarMatrix& a, const CStarMatrix& b);
  friend CStarMatrix operator*(const CStarMatrix& a, const CStarMatrix& b);
  friend CStarMatrix operator*(Complex s, const CStarMatrix& a);

 private:
  Matrix mat_;
};

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

enum class TensorFactor { first, second };

/// Largest singular value (works for rectangular matrices).
double operator_norm(const Matrix& m);

/// C*-norm of an algebra element.
double op_norm(const CStarMatrix& m);

/// Positivity: Hermitian within equality_tol and min eigenvalue of the
/// Hermitian part >= -psd_floor.  The minimum eigenvalue is always reported.
PsdReport psd_check(const CStarMatrix& m, const SpectralTolerance& tol = {});

/// m^{-1/2} for strictly positive m, via the Hermitian eigendecomposition.
/// Throws NotPositiveDefinite when min eigenvalue <= psd_floor.
CStarMatrix inv_sqrt_pos(const CStarMatrix& m, const SpectralTolerance& tol = {});

/// Kronecker product, row-major with the left factor outermost:
/// (a (x) b)[i1*rb+i2, j1*cb+j2] = a[i1,j1] * b[i2,j2].
Matrix kron(const Matrix& a, const Matrix& b);
CStarMatrix kron(const CStarMatrix& a, const CStarMatrix& b);

/// Partial trace of a (d1*d2)x(d1*d2) matrix over the chosen factor,
/// in the same index convention as kron().
CStarMatrix partial_trace(const CStarMatrix& m, Eigen::Index d1, Eigen::Index d2,
                          TensorFactor over);

/// In finite matrix algebras a co-isometry (aa* = id) is exactly a unitary.
bool is_coisometry(const CStarMatrix& a, const SpectralTolerance& tol = {});

/// Composite-dimension cap for kron / operator materialization.
/// Default 4096; the MVCS_MAX_DIM environment variable overrides it.
Eigen::Index max_composite_dim();

/// z^k for integer k >= 0 by repeated multiplication; cpow(0, 0) = 1.
inline Complex cpow(Complex z, int k) {
  Complex p(1.0, 0.0);
  for (int i = 0; i < k; ++i) p *= z;
  return p;
}

}  // namespace mvcs
