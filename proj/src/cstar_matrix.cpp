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

#include "mvcs/cstar_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

namespace mvcs {

namespace {

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

}  // namespace

CStarMatrix::CStarMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw InvalidMatrix("CStarMatrix: entries must form a square array, got " +
                        std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
  if (!all_finite(mat_)) throw InvalidMatrix("CStarMatrix: non-finite entry");
}

CStarMatrix CStarMatrix::identity(Eigen::Index dim) {
  return CStarMatrix(Matrix::Identity(dim, dim));
}

CStarMatrix CStarMatrix::zero(Eigen::Index dim) {
  return CStarMatrix(Matrix::Zero(dim, dim));
}

CStarMatrix operator+(const CStarMatrix& a, const CStarMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("CStarMatrix +: dimension mismatch");
  return CStarMatrix(a.mat_ + b.mat_);
}

CStarMatrix operator-(const CStarMatrix& a, const CStarMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("CStarMatrix -: dimension mismatch");
  return CStarMatrix(a.mat_ - b.mat_);
}

CStarMatrix operator*(const CStarMatrix& a, const CStarMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("CStarMatrix *: dimension mismatch");
  return CStarMatrix(a.mat_ * b.mat_);
}

CStarMatrix operator*(Complex s, const CStarMatrix& a) { return CStarMatrix(s * a.mat_); }

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (!all_finite(m)) throw InvalidMatrix("operator_norm: non-finite entry");
  // Largest eigenvalue of m* m; accurate for the top singular value.
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

double op_norm(const CStarMatrix& m) { return operator_norm(m.mat()); }

PsdReport psd_check(const CStarMatrix& m, const SpectralTolerance& tol) {
  PsdReport rep;
  const Matrix herm = 0.5 * (m.mat() + m.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = m.dim() == 0 ? 0.0 : es.eigenvalues().minCoeff();
  const double herm_defect = operator_norm(m.mat() - m.mat().adjoint());
  rep.psd = herm_defect <= tol.equality_tol && rep.min_eigenvalue >= -tol.psd_floor;
  return rep;
}

CStarMatrix inv_sqrt_pos(const CStarMatrix& m, const SpectralTolerance& tol) {
  const Matrix herm = 0.5 * (m.mat() + m.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (m.dim() == 0 || ev.minCoeff() <= tol.psd_floor)
    throw NotPositiveDefinite("inv_sqrt_pos: min eigenvalue " +
                              std::to_string(m.dim() == 0 ? 0.0 : ev.minCoeff()) +
                              " is not strictly positive");
  const Eigen::VectorXd inv_sqrt = ev.array().rsqrt();
  Matrix r = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
  r = 0.5 * (r + r.adjoint().eval());
  return CStarMatrix(std::move(r));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (ra * rb > max_composite_dim() || ca * cb > max_composite_dim())
    throw DimensionLimit("kron: composite dimension exceeds cap " +
                         std::to_string(max_composite_dim()));
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

CStarMatrix kron(const CStarMatrix& a, const CStarMatrix& b) {
  return CStarMatrix(kron(a.mat(), b.mat()));
}

CStarMatrix partial_trace(const CStarMatrix& m, Eigen::Index d1, Eigen::Index d2,
                          TensorFactor over) {
  if (d1 * d2 != m.dim())
    throw DimensionMismatch("partial_trace: " + std::to_string(d1) + "*" + std::to_string(d2) +
                            " != " + std::to_string(m.dim()));
  if (over == TensorFactor::first) {
    Matrix out = Matrix::Zero(d2, d2);
    for (Eigen::Index i1 = 0; i1 < d1; ++i1) out += m.mat().block(i1 * d2, i1 * d2, d2, d2);
    return CStarMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (Eigen::Index i1 = 0; i1 < d1; ++i1)
    for (Eigen::Index j1 = 0; j1 < d1; ++j1)
      out(i1, j1) = m.mat().block(i1 * d2, j1 * d2, d2, d2).trace();
  return CStarMatrix(std::move(out));
}

bool is_coisometry(const CStarMatrix& a, const SpectralTolerance& tol) {
  const Matrix defect = a.mat() * a.mat().adjoint() - Matrix::Identity(a.dim(), a.dim());
  return operator_norm(defect) <= tol.equality_tol;
}

Eigen::Index max_composite_dim() {
  static Eigen::Index cap = [] {
    if (const char* env = std::getenv("MVCS_MAX_DIM")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<Eigen::Index>(v);
    }
    return static_cast<Eigen::Index>(4096);
  }();
  return cap;
}

}  // namespace mvcs
