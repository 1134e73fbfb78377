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

#include "mvcs/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace mvcs {

CPKernel::CPKernel(CSFamily fam) : fam_(std::move(fam)) { validate_family(fam_); }

CPKernel cp_kernel(CSFamily fam) { return CPKernel(std::move(fam)); }

CStarMatrix CPKernel::eval(const Node& x, const Node& y, const CStarMatrix& a,
                           const CStarMatrix& a_prime) const {
  const CoherentState cx = coherent_state(fam_, x, a);
  const CoherentState cy = coherent_state(fam_, y, a_prime);
  return overlap(cx, cy);
}

CpPositivityReport cp_positivity_test(const CPKernel& kern,
                                      const std::vector<std::pair<Node, CStarMatrix>>& points,
                                      const std::vector<CStarMatrix>& b,
                                      const SpectralTolerance& tol) {
  if (points.empty()) throw Error("cp_positivity_test: need at least one point");
  if (points.size() != b.size())
    throw DimensionMismatch("cp_positivity_test: one b per point required");
  const std::size_t n = points.size();
  const Eigen::Index c = kern.family().H().cols;

  Matrix block = Matrix::Zero(static_cast<Eigen::Index>(n) * c, static_cast<Eigen::Index>(n) * c);
  Matrix quad = Matrix::Zero(c, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CStarMatrix kij =
          kern.eval(points[i].first, points[j].first, points[i].second, points[j].second);
      block.block(static_cast<Eigen::Index>(i) * c, static_cast<Eigen::Index>(j) * c, c, c) =
          kij.mat();
      quad += b[i].mat().adjoint() * kij.mat() * b[j].mat();
    }

  CpPositivityReport rep;
  const PsdReport pq = psd_check(CStarMatrix(quad), tol);
  const PsdReport pb = psd_check(CStarMatrix(block), tol);
  rep.min_eigenvalue = pq.min_eigenvalue;
  rep.min_eigenvalue_block = pb.min_eigenvalue;
  rep.pass = pq.psd && pb.psd;
  return rep;
}

ReproduceReport kernel_reproduce_check(const CPKernel& kern, const Node& x, const Node& z,
                                       const CStarMatrix& a, const CStarMatrix& a_prime,
                                       const CStarMatrix& b, double tol) {
  const SpectralTolerance spectral;
  if (!is_coisometry(a, spectral) || !is_coisometry(a_prime, spectral) ||
      !is_coisometry(b, spectral))
    throw NotCoisometry("kernel_reproduce_check: a, a' and b must satisfy aa* = id");
  const CSFamily& fam = kern.family();
  const CStarMatrix lhs = kern.eval(x, z, a, a_prime);
  const CoherentState cx = coherent_state(fam, x, a);
  const CoherentState cz = coherent_state(fam, z, a_prime);
  const IntegrationReport rhs = integrate_matrix_fn(fam.rule, [&](const Node& y) {
    const CoherentState cy = coherent_state(fam, y, b);
    return Matrix((cx.value.adjoint() * cy.value) * (cy.value.adjoint() * cz.value));
  });
  ReproduceReport rep;
  rep.defect = operator_norm(lhs.mat() - rhs.value);
  rep.bound = tol + fam.rule.tail_bound + fam.truncation_tail;
  rep.pass = rep.defect <= rep.bound;
  return rep;
}

namespace {

// Operator norm of A A* - B B* without touching the carrier dimension:
// compress onto an orthonormal basis of the joint column space and take
// the norm of the small Hermitian difference there.
double factored_difference_norm(const Matrix& a, const Matrix& b) {
  const Eigen::Index ca = a.cols(), cb = b.cols();
  if (ca + cb == 0) return 0.0;
  Matrix c(a.rows(), ca + cb);
  c.leftCols(ca) = a;
  c.rightCols(cb) = b;
  const Eigen::Index rank_cap = std::min(c.rows(), c.cols());
  Eigen::HouseholderQR<Matrix> qr(c);
  const Matrix q = qr.householderQ() * Matrix::Identity(c.rows(), rank_cap);
  const Matrix qa = q.adjoint() * a;
  const Matrix qb = q.adjoint() * b;
  return operator_norm(qa * qa.adjoint() - qb * qb.adjoint());
}

void validate_subset(const DilationScene& scene, const std::vector<int>& delta) {
  std::set<int> seen;
  for (int i : delta) {
    if (i < 0 || i >= static_cast<int>(scene.fam.rule.size()))
      throw InvalidSubset("node subset: index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second)
      throw InvalidSubset("node subset: duplicate index " + std::to_string(i));
  }
}

}  // namespace

DilationScene build_dilation(const CSFamily& fam, double tol) {
  validate_family(fam);
  const ModuleSpace h = fam.H();
  const auto n = static_cast<Eigen::Index>(fam.rule.size());
  const Eigen::Index c = h.cols;
  if (n * c > max_composite_dim())
    throw DimensionLimit("build_dilation: carrier dimension " + std::to_string(n * c) +
                         " exceeds the cap");

  DilationScene scene;
  scene.fam = fam;
  scene.block_dim = c;
  scene.states.reserve(static_cast<std::size_t>(n));
  const CStarMatrix id = CStarMatrix::identity(fam.E.rows);
  scene.isometry = Matrix(n * c, h.rows);
  // Node-sum route for the resolution matrix, kept separate from the
  // W*W product below so the projector identities are cross-checked.
  Matrix resolution = Matrix::Zero(h.rows, h.rows);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = fam.rule.weights[static_cast<std::size_t>(i)];
    const CoherentState cs =
        coherent_state(fam, fam.rule.nodes[static_cast<std::size_t>(i)], id);
    scene.states.push_back(cs.value);
    scene.isometry.block(i * c, 0, c, h.rows) = std::sqrt(w) * cs.value.adjoint();
    resolution.noalias() += w * cs.value * cs.value.adjoint();
  }
  scene.projection = scene.isometry * scene.isometry.adjoint();

  const Matrix gram = scene.isometry.adjoint() * scene.isometry;
  const Matrix id_h = Matrix::Identity(h.rows, h.rows);
  scene.isometry_defect = operator_norm(gram - id_h);

  // P^2 - P = W (W*W - I) W*: spectrum from the small side.
  Eigen::ComplexEigenSolver<Matrix> es(Matrix((gram - id_h) * gram), false);
  double idem = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    idem = std::max(idem, std::abs(es.eigenvalues()(i)));
  const double herm = (scene.projection.adjoint() - scene.projection).norm();
  scene.projection_defect = std::max(idem, herm);

  // sum_i w_i |h_i><h_i| - P = W (resolution - I) W*.
  Eigen::ComplexEigenSolver<Matrix> es2(Matrix((resolution - id_h) * gram), false);
  double frame_defect = 0.0;
  for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i)
    frame_defect = std::max(frame_defect, std::abs(es2.eigenvalues()(i)));
  scene.frame_identity_defect = frame_defect;

  scene.bound = tol + fam.rule.tail_bound;
  return scene;
}

Matrix carrier_state(const DilationScene& scene, const Node& x) {
  const CoherentState cs =
      coherent_state(scene.fam, x, CStarMatrix::identity(scene.fam.E.rows));
  return scene.isometry * cs.value;
}

Matrix nu_measure(const DilationScene& scene, const std::vector<int>& delta) {
  validate_subset(scene, delta);
  std::vector<int> sorted = delta;
  std::sort(sorted.begin(), sorted.end());
  const Eigen::Index dim = scene.projection.rows();
  Matrix nu = Matrix::Zero(dim, dim);
  for (int i : sorted) {
    const Matrix hi = scene.isometry * scene.states[static_cast<std::size_t>(i)];
    nu.noalias() += scene.fam.rule.weights[static_cast<std::size_t>(i)] * hi * hi.adjoint();
  }
  return nu;
}

Matrix pv_measure(const DilationScene& scene, const std::vector<int>& delta) {
  validate_subset(scene, delta);
  const Eigen::Index c = scene.block_dim;
  Matrix p = Matrix::Zero(scene.projection.rows(), scene.projection.cols());
  for (int i : delta)
    p.block(static_cast<Eigen::Index>(i) * c, static_cast<Eigen::Index>(i) * c, c, c)
        .setIdentity();
  return p;
}

DilationCheckReport dilation_check(const DilationScene& scene, const std::vector<int>& delta) {
  validate_subset(scene, delta);
  const Eigen::Index c = scene.block_dim;
  std::vector<int> sorted = delta;
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<Eigen::Index>(sorted.size());

  // nu(Delta) factored through the node states...
  Matrix a(scene.projection.rows(), m * c);
  for (Eigen::Index j = 0; j < m; ++j) {
    const int node = sorted[static_cast<std::size_t>(j)];
    a.middleCols(j * c, c) = std::sqrt(scene.fam.rule.weights[static_cast<std::size_t>(node)]) *
                             (scene.isometry * scene.states[static_cast<std::size_t>(node)]);
  }
  // ...against P PV(Delta) P through the materialized projection: the PV
  // compression is P[:, Delta] P[Delta, :].
  Matrix b(scene.projection.rows(), m * c);
  for (Eigen::Index j = 0; j < m; ++j)
    b.middleCols(j * c, c) =
        scene.projection.middleCols(static_cast<Eigen::Index>(sorted[static_cast<std::size_t>(j)]) * c, c);

  DilationCheckReport rep;
  rep.defect_naimark = factored_difference_norm(a, b);

  // The projection-valued measure is a 0/1 diagonal; idempotence is exact.
  const Matrix pv = pv_measure(scene, delta);
  rep.defect_pvm =
      (pv.diagonal().array().square() - pv.diagonal().array()).matrix().norm();
  return rep;
}

double nu_additivity_defect(const DilationScene& scene, const std::vector<int>& d1,
                            const std::vector<int>& d2) {
  std::vector<int> both = d1;
  both.insert(both.end(), d2.begin(), d2.end());
  const Matrix joint = nu_measure(scene, both);  // throws on overlap
  return (joint - nu_measure(scene, d1) - nu_measure(scene, d2)).norm();
}

MinimalityReport minimality_check(const DilationScene& scene) {
  for (double w : scene.fam.rule.weights)
    if (!(w > 0.0))
      throw Error("minimality_check: support condition needs strictly positive weights");
  MinimalityReport rep;
  const Eigen::Index c = scene.block_dim;
  rep.carrier_dimension = static_cast<Eigen::Index>(scene.states.size()) * c * c;
  Eigen::Index span = 0;
  for (const Matrix& v : scene.states) {
    Eigen::JacobiSVD<Matrix> svd(v);
    const auto& s = svd.singularValues();
    const double thresh =
        static_cast<double>(std::max(v.rows(), v.cols())) * 1e-12 * (s.size() ? s(0) : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > thresh) ++rank;
    span += rank * c;
  }
  rep.span_dimension = span;
  rep.full = rep.span_dimension == rep.carrier_dimension;
  return rep;
}

Matrix carrier_left_action(const DilationScene& scene, const CStarMatrix& a, const Matrix& h,
                           double tol) {
  if (h.rows() != scene.projection.rows() || h.cols() != scene.block_dim)
    throw DimensionMismatch("carrier_left_action: element has the wrong shape");
  // f = (W*W)^{-1} W* h; defined only when h lies in range(W).
  const Matrix gram = scene.isometry.adjoint() * scene.isometry;
  const Matrix f = gram.ldlt().solve(scene.isometry.adjoint() * h);
  const double residual = operator_norm(scene.isometry * f - h);
  const double scale = std::max(1.0, operator_norm(h));
  if (residual > tol * scale)
    throw NotInRange("carrier_left_action: element is not in range(W) (residual " +
                     std::to_string(residual) + ")");
  const Matrix lifted = kron(a.mat(), Matrix::Identity(scene.fam.G.rows, scene.fam.G.rows)) * f;
  return scene.isometry * lifted;
}

}  // namespace mvcs
